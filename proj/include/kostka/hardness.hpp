#pragma once

// Reduction from Subset Sum to membership in the Hilbert basis of the
// Kostka semigroup, with a brute-force referee for both directions.

#include <optional>
#include <string>
#include <vector>

#include "kostka/gale_ryser.hpp"

namespace kostka {

struct SubsetSumInstance {
    std::vector<Int> values;  // a_1..a_d, any order
    Int target = 0;           // b

    /// Throws InvalidInstance unless d >= 1 and all values and the target are positive.
    SubsetSumInstance(std::vector<Int> values, Int target);

    /// Parses "a1,a2,...,ad : b".
    static SubsetSumInstance parse(std::string_view text);

    Int total() const;
    std::string to_string() const;
};

inline constexpr int kSubsetSumCap = 24;

/// Lexicographically smallest index set (1-based, input order) with sum b.
std::optional<std::vector<int>> subset_sum_oracle(const SubsetSumInstance& inst);

/// lambda has columns A+1, a_1, ..., a_d; mu has columns A+1+(A-b) and b;
/// the rank is the longest column, A+1+(A-b). Throws InvalidInstance when b > A.
KostkaPair reduce_to_kostka(const SubsetSumInstance& inst);

/// The explicit splitting for a subset S with sum b: the bullet piece takes the
/// columns a_i (i in S) against mu = (1^b), the circ piece keeps the rest.
Decomposition subset_decomposition(const SubsetSumInstance& inst, const std::vector<int>& subset);

struct ReductionReport {
    SubsetSumInstance instance;
    KostkaPair pair;
    std::optional<std::vector<int>> subset;
    bool reducible;
    std::optional<Decomposition> certificate;  // from the subset, when one exists
    std::size_t coordinates;                   // 2 * rank
};

/// Runs both sides and asserts subset exists <=> the reduced pair is reducible.
ReductionReport reduction_equivalence_check(const SubsetSumInstance& inst, Int box_cap = 40);

}  // namespace kostka
