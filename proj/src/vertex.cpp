#include "cubefree/vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubefree/params.hpp"

namespace cubefree {

std::uint64_t width_mask(int n) {
    if (n <= 0) return 0;
    if (n >= 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << n) - 1;
}

Vertex make_vertex(std::uint64_t bits, int n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("vertex dimension out of range: " + std::to_string(n));
    if ((bits & ~width_mask(n)) != 0)
        throw std::invalid_argument("vertex mask has bits set beyond dimension " +
                                    std::to_string(n));
    return Vertex{bits, n};
}

std::string format_vertex(const Vertex& v) {
    std::string out(static_cast<std::size_t>(v.n), '0');
    for (int i = 0; i < v.n; ++i)
        if ((v.bits >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

Vertex parse_vertex(std::string_view text) {
    const auto n = static_cast<int>(text.size());
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("vertex string length out of range: " +
                                    std::to_string(text.size()));
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        const char c = text[static_cast<std::size_t>(i)];
        if (c == '1')
            bits |= std::uint64_t{1} << i;
        else if (c != '0')
            throw std::invalid_argument(std::string("invalid character '") + c +
                                        "' in vertex string");
    }
    return Vertex{bits, n};
}

VertexSet::VertexSet(int n, std::vector<Vertex> members) : n_(n), members_(std::move(members)) {
    if (n_ < 1 || n_ > kMaxDimension) {
        if (!(n_ == 0 && members_.empty()))
            throw std::invalid_argument("vertex set dimension out of range: " +
                                        std::to_string(n_));
    }
    for (const Vertex& v : members_) {
        if (v.n != n_)
            throw std::invalid_argument("vertex dimension " + std::to_string(v.n) +
                                        " does not match set dimension " + std::to_string(n_));
        if ((v.bits & ~width_mask(n_)) != 0)
            throw std::invalid_argument("vertex mask overflows set dimension");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    if (n_ >= 1 && n_ <= kDirectTableMaxN) {
        table_.assign(std::size_t{1} << n_, false);
        for (const Vertex& v : members_) table_[static_cast<std::size_t>(v.bits)] = true;
    } else {
        lookup_.reserve(members_.size() * 2);
        for (const Vertex& v : members_) lookup_.insert(v.bits);
    }
}

bool VertexSet::contains(const Vertex& v) const {
    if (v.n != n_)
        throw std::invalid_argument("dimension mismatch: vertex has n=" + std::to_string(v.n) +
                                    ", set has n=" + std::to_string(n_));
    if (!table_.empty()) return table_[static_cast<std::size_t>(v.bits)];
    return lookup_.count(v.bits) != 0;
}

}  // namespace cubefree
