#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kostka/errors.hpp"

namespace kostka {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// A weakly decreasing sequence of nonnegative integers, stored with
/// trailing zeros removed so that equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    /// The partition whose columns have the given lengths (any order, zeros ignored).
    static Partition from_columns(std::vector<Int> column_lengths);

    /// Parses "4,2,1". The empty string and "0" give the empty partition.
    static Partition parse(std::string_view text);

    std::span<const Int> parts() const { return parts_; }
    const std::vector<Int>& vec() const { return parts_; }

    /// Number of nonzero parts.
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Int size() const { return size_; }

    /// 0-based part access; reads 0 past the last nonzero part.
    Int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    Int first() const { return (*this)[0]; }

    std::vector<Int> padded(std::size_t r) const;
    bool is_rectangle() const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Int> parts_;
    Int size_ = 0;
};

Partition operator+(const Partition& a, const Partition& b);

Partition conjugate(const Partition& p);

/// a >=_Dom b: equal sizes and every prefix sum of a is at least that of b.
bool dominates(const Partition& a, const Partition& b);

/// Prefix-sum comparison only, without requiring |a| == |b|.
bool prefix_dominates(const Partition& a, const Partition& b);

bool in_kostka_cone(const Partition& lambda, const Partition& mu, int rank);

inline constexpr Int kDefaultKostkaBoxCap = 30;

/// Number of semistandard tableaux of shape lambda and content mu, by
/// exhaustive cell-by-cell filling. Test oracle only.
Int kostka_count(const Partition& lambda, const Partition& mu, Int box_cap = kDefaultKostkaBoxCap);

/// K_{lambda,mu} > 0, decided through dominance.
bool kostka_positive(const Partition& lambda, const Partition& mu);

/// All partitions of n with at most max_parts parts, each at most max_part,
/// in decreasing lexicographic order.
std::vector<Partition> partitions_of(Int n, Int max_parts, Int max_part);
std::vector<Partition> partitions_of(Int n);

/// An element (lambda, mu) of the Kostka semigroup in rank r.
class KostkaPair {
public:
    KostkaPair(Partition lambda, Partition mu, int rank);

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    int rank() const { return rank_; }
    Int size() const { return lambda_.size(); }
    bool is_zero() const { return lambda_.empty(); }

    std::string to_string() const;

    friend bool operator==(const KostkaPair&, const KostkaPair&) = default;
    friend auto operator<=>(const KostkaPair& a, const KostkaPair& b)
    {
        if (auto c = a.lambda_ <=> b.lambda_; c != 0)
            return c;
        if (auto c = a.mu_ <=> b.mu_; c != 0)
            return c;
        return a.rank_ <=> b.rank_;
    }

private:
    Partition lambda_;
    Partition mu_;
    int rank_;
};

KostkaPair operator+(const KostkaPair& a, const KostkaPair& b);

}  // namespace kostka
