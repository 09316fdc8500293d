#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "domishold/error.hpp"

namespace domishold {

/// Largest vertex count any graph, hypergraph or function may have.
inline constexpr int kMaxVertices = 64;

/// A set of small vertex indices packed into one machine word.
///
/// Iteration yields members in ascending order. Ordering (`operator<`) is the
/// lexicographic order of the ascending member lists, so {0} < {0,1} < {1}.
class VertexSet {
public:
    using Word = std::uint64_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members) {
        for (int v : members) insert(v);
    }

    static VertexSet from_vector(const std::vector<int>& members) {
        VertexSet s;
        for (int v : members) s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= kMaxVertices ? ~Word{0} : ((Word{1} << n) - 1));
    }

    static constexpr VertexSet single(int v) { return VertexSet(Word{1} << v); }

    constexpr Word bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }

    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) {
            throw InputError("vertex index " + std::to_string(v) + " out of range");
        }
        bits_ |= Word{1} << v;
    }
    constexpr void erase(int v) { bits_ &= ~(Word{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Largest member, or -1 when empty.
    constexpr int max() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
    constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

    friend constexpr bool operator<(VertexSet a, VertexSet b) {
        const Word diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        const int d = std::countr_zero(diff);
        const Word above = d == 63 ? 0 : (~Word{0} << (d + 1));
        if (a.contains(d)) {
            // a continues with d; b is either a prefix (b < a) or continues past d.
            return (b.bits_ & above) != 0;
        }
        return (a.bits_ & above) == 0;
    }
    friend constexpr bool operator>(VertexSet a, VertexSet b) { return b < a; }
    friend constexpr bool operator<=(VertexSet a, VertexSet b) { return !(b < a); }
    friend constexpr bool operator>=(VertexSet a, VertexSet b) { return !(a < b); }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(Word rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator old = *this; ++*this; return old; }
        friend constexpr bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }

    private:
        Word rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    Word bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace domishold
