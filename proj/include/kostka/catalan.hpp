#pragma once

// Generalized Catalan sequences: nonzero integers with total 0 and
// nonnegative prefix sums. Cost, width, sublist reducibility, and common
// reducibility of Kostka pairs through the column-difference sequence.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kostka/gale_ryser.hpp"

namespace kostka {

class CatalanSeq {
public:
    /// Throws InvalidSequence unless the entries are nonzero, sum to zero and
    /// have nonnegative prefix sums. The empty sequence is not accepted.
    explicit CatalanSeq(std::vector<Int> entries);

    static CatalanSeq parse(std::string_view text);
    static bool is_valid(const std::vector<Int>& entries);

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    std::string to_string() const;

private:
    std::vector<Int> entries_;
};

/// Largest absolute value of each maximal constant-sign run.
std::vector<Int> run_maxima(const CatalanSeq& x);
Int cost(const CatalanSeq& x);
Int width(const CatalanSeq& x);

inline constexpr int kCatalanSearchCap = 24;
inline constexpr int kKimCheckCap = 20;

/// Lexicographically smallest nontrivial proper index set (1-based) whose
/// sublist and complementary sublist are both generalized Catalan.
std::optional<std::vector<int>> catalan_reducible(const CatalanSeq& x, int length_cap = kCatalanSearchCap);

/// True if indices and their complement both give Catalan sublists.
bool is_catalan_split(const CatalanSeq& x, const std::vector<int>& indices);

/// x_j = mu'_j - lambda'_j for j = 1..lambda_1. May contain zeros.
std::vector<Int> pair_to_sequence(const KostkaPair& pair);

struct CommonReduction {
    ColumnSet columns;  // common column indices taken into the bullet piece
    Decomposition parts;
};

/// Splits the pair taking the same column indices from lambda and mu.
/// Throws NotAWitness if the result leaves the cone or the set is trivial.
Decomposition split_common_columns(const KostkaPair& pair, const ColumnSet& columns);

std::optional<CommonReduction> commonly_reducible(const KostkaPair& pair, int length_cap = kCatalanSearchCap);

struct KimReport {
    Int cost;
    Int width;
    bool premise;  // cost < width
    std::optional<std::vector<int>> witness;
};

/// Checks that cost < width forces reducibility; throws AssertionFailure otherwise.
KimReport kim_theorem_check(const CatalanSeq& x);

/// Uniform-ish random Catalan sequence of length in [2, max_length] with
/// positive entries at most max_entry.
CatalanSeq random_catalan(std::mt19937_64& rng, int max_length, Int max_entry);

}  // namespace kostka
