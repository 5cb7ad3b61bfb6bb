#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hamfan {

inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from 0..63, stored as a single machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> members)
    {
        for (int v : members)
            insert(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

} // namespace hamfan
