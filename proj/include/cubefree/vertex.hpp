#pragma once

// Hypercube vertices as bit masks. Coordinate i (1-based) is stored at bit
// position i-1 and printed as the i-th character from the left, so the
// string "010110" has coordinates 2, 4, 5 set (bits 1, 3, 4).

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cubefree {

struct Vertex {
    std::uint64_t bits = 0;
    int n = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Canonical vertex order: ascending integer value of the mask. All streams
// and set listings use this order.
inline bool operator<(const Vertex& a, const Vertex& b) { return a.bits < b.bits; }

// Order of the printed 0-1 strings: the lowest-index differing coordinate
// decides, 0 before 1. Not the same as the integer order above ("110" < "011"
// as integers but not as strings). Used for reported witnesses and for
// "lexicographically least/largest" tie-breaks.
inline bool lex_less(const Vertex& a, const Vertex& b) {
    const std::uint64_t d = a.bits ^ b.bits;
    if (d == 0) return false;
    return ((a.bits >> std::countr_zero(d)) & 1u) == 0;
}

// All-ones mask of the given width (width 64 included).
std::uint64_t width_mask(int n);

// Validating constructor; throws if n is out of range or bits overflow n.
Vertex make_vertex(std::uint64_t bits, int n);

std::string format_vertex(const Vertex& v);

// Parses an n-character 0-1 string, n taken from the length.
Vertex parse_vertex(std::string_view text);

// Duplicate-free ascending collection of same-dimension vertices with a
// constant-time membership table.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int n, std::vector<Vertex> members);

    static VertexSet empty_set(int n) { return VertexSet(n, {}); }

    int dimension() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    bool contains(const Vertex& v) const;  // throws on dimension mismatch

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    // Direct bit table up to this dimension, hashing beyond.
    static constexpr int kDirectTableMaxN = 16;

    int n_ = 0;
    std::vector<Vertex> members_;
    std::vector<bool> table_;
    std::unordered_set<std::uint64_t> lookup_;
};

}  // namespace cubefree
