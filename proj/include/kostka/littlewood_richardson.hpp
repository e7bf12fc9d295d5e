#pragma once

// Littlewood-Richardson coefficients by enumerating ballot skew tableaux, and
// a family of triples whose nu_1 grows quadratically in the rank.

#include <optional>
#include <string>
#include <vector>

#include "kostka/partition.hpp"

namespace kostka {

inline constexpr Int kDefaultLrBoxCap = 30;

/// c^nu_{lambda,mu}: semistandard fillings of nu/lambda with content mu whose
/// reading word (rows top to bottom, each right to left) is a ballot sequence.
/// Throws ShapeError if lambda is not contained in nu and SizeCapExceeded if
/// |nu| exceeds the cap. Returns 0 when |lambda| + |mu| != |nu|.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                   Int box_cap = kDefaultLrBoxCap);

struct LrTriple {
    Partition lambda;
    Partition mu;
    Partition nu;
    int rank = 0;

    std::string to_string() const;
};

/// Rank r = 3k-1; lambda = (k^(k-1), (k-1)^k); mu repeats j(k-1) three times
/// for j = k-1, ..., 1; nu = ((k(k-1))^2, then the parts of mu).
/// Asserts the size identities and nu_1 = k(k-1). Requires k >= 2.
LrTriple counterexample_family(int k);

struct FamilyRow {
    int k;
    int rank;
    Int nu_1;
    Int lambda_size;
    Int mu_size;
    Int nu_size;
    bool exceeds_rank;             // nu_1 > r
    std::optional<Int> coefficient;  // only within the oracle cap
};

struct FamilyReport {
    std::vector<FamilyRow> rows;
    int first_violation = 0;  // smallest k with nu_1 > r, 0 if none in range
};

/// Checks every k in [2, k_max]: size identities, nu_1 = ((r+1)/3)((r+1)/3 - 1),
/// primitivity through gcd(lambda_1, lambda_k) = 1, nu_1 > r for k >= 4, and a
/// positive coefficient whenever |nu| fits the oracle cap. Throws AssertionFailure.
FamilyReport verify_counterexample(int k_max, Int box_cap = kDefaultLrBoxCap);

}  // namespace kostka
