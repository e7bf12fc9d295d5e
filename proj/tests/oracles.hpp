#pragma once

// Brute-force referees. These share no code with the library beyond the
// Partition and KostkaPair value types.

#include <vector>

#include "kostka/partition.hpp"

namespace oracle {

using kostka::Int;
using kostka::KostkaPair;
using kostka::Partition;
using Vec = std::vector<Int>;

/// All partitions of n with at most max_len parts, each at most max_part.
std::vector<Vec> partitions(Int n, Int max_len, Int max_part);

Vec conjugate(const Vec& p);

/// Prefix sums of a at least those of b, equal totals.
bool dominates(const Vec& a, const Vec& b);

/// Every (lambda, mu) with |lambda| = n, lambda_1 <= max_part, at most r rows,
/// and lambda dominating mu.
std::vector<std::pair<Vec, Vec>> cone_pairs(Int n, int r, Int max_part);

/// Backtracking search for a {0,1}-matrix with the given row and column sums.
bool matrix_exists(const Vec& rows, const Vec& cols);

/// Every (lambda-circ, mu-circ) splitting of a pair into two nonzero cone
/// members of rank r; the other half is the difference.
std::vector<std::pair<Vec, Vec>> splittings(const Vec& lambda, const Vec& mu, int r);

/// Tries every lambda-circ of every size and every mu-circ.
bool reducible(const Vec& lambda, const Vec& mu, int r);

/// Row-sum test over every proper nonempty column subset of a 0/1 matrix.
bool columns_reducible(const std::vector<Vec>& a);

/// True if some subset has the given sum.
bool subset_sum(const Vec& values, Int target);

/// Every proper nonempty sublist checked for the Catalan property on both sides.
bool catalan_split_exists(const Vec& x);

bool is_catalan(const Vec& x);

/// 1 when nu / lambda is a horizontal strip of size m, else 0.
Int pieri(const Vec& lambda, Int m, const Vec& nu);

inline Vec vec(const Partition& p)
{
    return p.vec();
}

}  // namespace oracle
