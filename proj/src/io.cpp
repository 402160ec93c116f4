#include "cubefree/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cubefree/params.hpp"

namespace cubefree {

namespace {

std::string strip(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

// Accepts `# n=<int>` with an optional ` r=<int>` tail.
bool parse_header(const std::string& comment, int& n, std::optional<int>& r) {
    std::istringstream in(comment);
    std::string hash, n_part;
    if (!(in >> hash >> n_part) || hash != "#" || n_part.rfind("n=", 0) != 0) return false;
    try {
        std::size_t used = 0;
        n = std::stoi(n_part.substr(2), &used);
        if (used != n_part.size() - 2) return false;
        std::string r_part;
        if (in >> r_part) {
            if (r_part.rfind("r=", 0) != 0) return false;
            r = std::stoi(r_part.substr(2), &used);
            if (used != r_part.size() - 2) return false;
        }
        std::string rest;
        return !(in >> rest);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

VertexSetFile read_vertex_set(std::istream& in) {
    VertexSetFile out;
    std::vector<Vertex> members;
    std::string line;
    int line_no = 0;
    int n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty()) continue;
        if (text[0] == '#') {
            int header_n = 0;
            std::optional<int> header_r;
            if (!out.header_n && members.empty() && parse_header(text, header_n, header_r)) {
                if (header_n < 1 || header_n > kMaxDimension)
                    throw std::invalid_argument("line " + std::to_string(line_no) +
                                                ": header dimension out of range");
                out.header_n = header_n;
                out.header_r = header_r;
                n = header_n;
            }
            continue;
        }
        Vertex v;
        try {
            v = parse_vertex(text);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (n == 0) n = v.n;
        if (v.n != n)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(n) + " characters, got " +
                                        std::to_string(v.n));
        members.push_back(v);
    }
    out.set = VertexSet(n, std::move(members));
    return out;
}

VertexSetFile read_vertex_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_vertex_set(in);
}

void write_vertex_set(std::ostream& out, const VertexSet& set, std::optional<int> r) {
    out << "# n=" << set.dimension();
    if (r) out << " r=" << *r;
    out << '\n';
    for (const Vertex& v : set) out << format_vertex(v) << '\n';
}

void write_vertex_set_file(const std::string& path, const VertexSet& set, std::optional<int> r) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_vertex_set(out, set, r);
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace cubefree
