#pragma once

// Irreducibility, Hilbert bases of the Kostka semigroup at small rank,
// extremal rays, and the width bound audit.

#include <optional>
#include <string>
#include <vector>

#include "kostka/gale_ryser.hpp"

namespace kostka {

inline constexpr Int kDefaultIrreducibleBoxCap = 40;
inline constexpr int kMaxBasisRank = 6;

struct IrreducibilityResult {
    bool irreducible;
    std::optional<Decomposition> witness;  // set when reducible
};

/// Exhaustive search over splittings (lambda, mu) = bullet + circ with both
/// halves in the cone. Circ sizes are tried smallest first, so the witness
/// has the smallest possible circ piece. The zero pair is not irreducible.
IrreducibilityResult is_irreducible(const KostkaPair& pair, Int box_cap = kDefaultIrreducibleBoxCap);

/// Every cone pair of rank r with lambda_1 <= lambda_1_cap and |lambda| <= max_size,
/// ordered by size, then lambda, then mu.
std::vector<KostkaPair> cone_pairs(int r, Int lambda_1_cap, Int max_size);

struct BasisCatalog {
    int rank = 0;
    std::vector<KostkaPair> elements;  // sorted by (lambda, mu)
    std::vector<std::string> notes;
};

/// Candidates are cone pairs with lambda inside the r x r box; a candidate is
/// discarded as soon as the conservative-subtree test splits it, and the rest
/// go through is_irreducible. jobs <= 1 runs serially.
BasisCatalog hilbert_basis(int r, int jobs = 1);

struct RaySpec {
    Int a = 1;
    Int b = 1;
    Int ell = 0;
    int rank = 1;

    /// r >= a + ell >= a >= b > 0 and ell >= 0.
    bool valid() const;
    KostkaPair expand() const;
    std::string to_string() const;

    friend bool operator==(const RaySpec&, const RaySpec&) = default;
};

/// One spec per ray. Triples with a == b all give the ray of ((1^m),(1^m))
/// with m = a + ell, so they are listed once as (1, 1, m - 1).
std::vector<RaySpec> extremal_rays(int r);

/// C(r,3) + C(r,2) + C(r,1).
Int ray_count_formula(int r);

/// First lattice point on the ray of spec. Throws InvalidPair for invalid specs.
KostkaPair primitive_point(const RaySpec& spec);

/// The pair divided by the gcd of its coordinates.
KostkaPair primitive(const KostkaPair& pair);

struct ExtremalityReport {
    bool family_test;
    bool rank_test;
    std::size_t tight_rank;
};

/// Runs the family-membership test and the tight-inequality rank test.
/// Throws InconsistentExtremalityTests if they disagree.
ExtremalityReport extremality(const KostkaPair& pair);
bool is_extremal(const KostkaPair& pair);

struct WidthAuditEntry {
    KostkaPair pair;
    bool ok;
    std::string note;
};

struct WidthAuditReport {
    int rank = 0;
    std::size_t basis_size = 0;
    std::size_t basis_checked = 0;
    std::size_t rectangle_pairs = 0;       // basis elements with lambda_1 = r
    std::size_t sweep_pairs = 0;           // pairs with lambda_1 = r + 1
    std::size_t sweep_fast = 0;            // of those, split by the subtree test
    std::vector<WidthAuditEntry> failures;

    bool passed() const { return failures.empty(); }
};

/// Checks lambda_1 <= r on the basis, rectangles when lambda_1 = r, and
/// reducibility of every cone pair with lambda_1 = r + 1 and |lambda| <= r(r+1).
/// Throws AssertionFailure naming the first offending pair when
/// throw_on_failure is set.
WidthAuditReport width_bound_audit(int r, const BasisCatalog& basis, int jobs = 1, bool throw_on_failure = true);
WidthAuditReport width_bound_audit(int r, int jobs = 1);

}  // namespace kostka
