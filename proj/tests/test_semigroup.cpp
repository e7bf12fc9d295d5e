#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "fixture_io.hpp"
#include "kostka/errors.hpp"
#include "kostka/kgr.hpp"
#include "kostka/semigroup.hpp"
#include "kostka/tables.hpp"
#include "oracles.hpp"

using namespace kostka;

namespace {

Partition rect(Int rows, Int cols)
{
    return Partition(std::vector<Int>(std::size_t(rows), cols));
}

KostkaPair with_rank(const KostkaPair& p, int r)
{
    return KostkaPair(p.lambda(), p.mu(), r);
}

bool contains(const BasisCatalog& c, const KostkaPair& p)
{
    return std::binary_search(c.elements.begin(), c.elements.end(), p);
}

}  // namespace

TEST_CASE("irreducibility examples")
{
    const auto r = is_irreducible(KostkaPair({3, 2, 1}, {2, 2, 1, 1}, 4));
    CHECK_FALSE(r.irreducible);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->circ == KostkaPair({1, 1}, {1, 1}, 4));
    CHECK(r.witness->bullet == KostkaPair({2, 1, 1}, {1, 1, 1, 1}, 4));

    CHECK(is_irreducible(KostkaPair({1}, {1}, 1)).irreducible);
    CHECK_FALSE(is_irreducible(KostkaPair({}, {}, 3)).irreducible);
    for (int k = 2; k <= 5; ++k)
        CHECK(is_irreducible(KostkaPair(rect(k - 1, k), rect(k, k - 1), k)).irreducible);
    CHECK_THROWS_AS(is_irreducible(KostkaPair(Partition{41}, Partition{41}, 1)), SizeCapExceeded);
    CHECK_NOTHROW(is_irreducible(KostkaPair(Partition{41}, Partition{41}, 1), 41));
}

TEST_CASE("irreducibility agrees with brute force up to 10 boxes")
{
    for (Int n = 1; n <= 10; ++n)
        for (const auto& [l, m] : oracle::cone_pairs(n, int(n), n)) {
            for (int extra = 0; extra <= 1; ++extra) {
                const int r = int(m.size()) + extra;
                const KostkaPair p{Partition(l), Partition(m), r};
                const auto res = is_irreducible(p);
                CHECK(res.irreducible == !oracle::reducible(l, m, r));
                if (res.witness) {
                    const auto& d = *res.witness;
                    CHECK(d.bullet + d.circ == p);
                    CHECK(in_kostka_cone(d.bullet.lambda(), d.bullet.mu(), r));
                    CHECK(in_kostka_cone(d.circ.lambda(), d.circ.mu(), r));
                }
            }
        }
}

TEST_CASE("cone pairs")
{
    const auto ps = cone_pairs(3, 3, 9);
    CHECK(std::is_sorted(ps.begin(), ps.end(), [](const KostkaPair& a, const KostkaPair& b) {
        return std::tuple(a.size(), a.lambda(), a.mu()) < std::tuple(b.size(), b.lambda(), b.mu());
    }));
    std::size_t expected = 0;
    for (Int n = 1; n <= 9; ++n)
        expected += oracle::cone_pairs(n, 3, 3).size();
    CHECK(ps.size() == expected);
}

TEST_CASE("Hilbert basis of rank 4 is the published table")
{
    const auto table = fixture::pairs("table1_r4.txt", 4);
    REQUIRE(table.size() == 19);
    CHECK(hilbert_basis(4).elements == table);
    CHECK(hilbert_basis(4, 4).elements == table);
}

TEST_CASE("Hilbert basis counts")
{
    CHECK(hilbert_basis(1).elements == std::vector{KostkaPair({1}, {1}, 1)});
    for (int r = 1; r <= kMaxBasisRank; ++r)
        CHECK(Int(hilbert_basis(r, 2).elements.size()) == kPublishedBasisCounts[std::size_t(r - 1)]);
    CHECK_THROWS_AS(hilbert_basis(0), RankCapExceeded);
    CHECK_THROWS_AS(hilbert_basis(7), RankCapExceeded);
}

TEST_CASE("extremal rays")
{
    CHECK(extremal_rays(4).size() == 14);
    const auto one = extremal_rays(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == RaySpec{1, 1, 0, 1});
    CHECK(one[0].expand() == KostkaPair({1}, {1}, 1));
    CHECK(extremal_rays(17).size() == 833);
    for (int r = 1; r <= 17; ++r) {
        const auto rays = extremal_rays(r);
        CHECK(Int(rays.size()) == ray_count_formula(r));
        CHECK(ray_count_formula(r) == kPublishedRayCounts[std::size_t(r - 1)]);
        std::vector<KostkaPair> prims;
        for (const auto& s : rays) {
            CHECK(s.valid());
            prims.push_back(primitive_point(s));
        }
        std::sort(prims.begin(), prims.end());
        CHECK(std::adjacent_find(prims.begin(), prims.end()) == prims.end());
    }
    CHECK_FALSE(RaySpec{1, 2, 0, 3}.valid());
    CHECK_FALSE(RaySpec{3, 1, 1, 3}.valid());
    CHECK_THROWS_AS(primitive_point(RaySpec{3, 1, 1, 3}), InvalidPair);
}

TEST_CASE("primitive points")
{
    CHECK(primitive_point(RaySpec{2, 2, 0, 2}) == KostkaPair({1, 1}, {1, 1}, 2));
    CHECK(primitive_point(RaySpec{1, 1, 0, 1}) == KostkaPair({1}, {1}, 1));
    CHECK(primitive_point(RaySpec{2, 1, 1, 3}) == KostkaPair({2, 2}, {2, 1, 1}, 3));
    CHECK(primitive(KostkaPair({4, 4}, {4, 2, 2}, 3)) == KostkaPair({2, 2}, {2, 1, 1}, 3));
}

TEST_CASE("extremality")
{
    CHECK(is_extremal(KostkaPair({2, 2}, {2, 1, 1}, 3)));
    CHECK_FALSE(is_extremal(KostkaPair({3, 2, 1}, {2, 2, 1, 1}, 4)));
    CHECK(is_extremal(KostkaPair({1}, {1}, 1)));
    CHECK(is_extremal(KostkaPair({6, 6}, {6, 3, 3}, 3)));

    // Both tests agree on every cone pair of rank 3 up to 9 boxes.
    std::size_t extremal = 0;
    for (const auto& p : cone_pairs(3, 9, 9)) {
        const auto rep = extremality(p);
        CHECK(rep.family_test == rep.rank_test);
        extremal += rep.family_test && primitive(p) == p;
    }
    CHECK(extremal == 7);
}

TEST_CASE("primitive points of rays are non-decomposable")
{
    for (int r = 1; r <= 4; ++r)
        for (const auto& s : extremal_rays(r)) {
            const KostkaPair p = primitive_point(s);
            CHECK(is_irreducible(p).irreducible);
            const KostkaPair twice = p + p;
            if (twice.size() > 16)
                continue;
            // Every splitting of a multiple is a splitting into parallel pieces.
            for (const auto& [lc, mc] : oracle::splittings(twice.lambda().vec(), twice.mu().vec(), r)) {
                const KostkaPair piece{Partition(lc), Partition(mc), r};
                CHECK(primitive(piece) == p);
            }
        }
}

TEST_CASE("rays embed in the basis and the basis is strictly larger")
{
    for (int r = 1; r <= 5; ++r) {
        const BasisCatalog b = hilbert_basis(r, 2);
        for (const auto& s : extremal_rays(r))
            CHECK(contains(b, primitive_point(s)));
        if (r >= 3)
            CHECK(b.elements.size() > extremal_rays(r).size());
    }
}

TEST_CASE("bases of smaller rank embed")
{
    std::vector<BasisCatalog> bases;
    for (int r = 1; r <= 5; ++r)
        bases.push_back(hilbert_basis(r, 2));
    for (int lo = 1; lo <= 5; ++lo)
        for (int hi = lo; hi <= 5; ++hi)
            for (const auto& p : bases[std::size_t(lo - 1)].elements)
                CHECK(contains(bases[std::size_t(hi - 1)], with_rank(p, hi)));
}

TEST_CASE("fast reducibility implies reducibility")
{
    for (int r = 1; r <= 5; ++r)
        for (const auto& p : cone_pairs(r, r + 2, 14))
            if (fast_reducibility(p))
                CHECK_FALSE(is_irreducible(p).irreducible);
}

TEST_CASE("width bound audit")
{
    CHECK(width_bound_audit(1).passed());
    const WidthAuditReport four = width_bound_audit(4, 2);
    CHECK(four.passed());
    CHECK(four.basis_checked == 19);
    CHECK(four.rectangle_pairs == 2);
    const BasisCatalog b = hilbert_basis(4);
    std::vector<KostkaPair> wide;
    for (const auto& p : b.elements)
        if (p.lambda().first() == 4)
            wide.push_back(p);
    CHECK(wide == std::vector{KostkaPair({4}, {1, 1, 1, 1}, 4), KostkaPair({4, 4, 4}, {3, 3, 3, 3}, 4)});
    const WidthAuditReport five = width_bound_audit(5, 4);
    CHECK(five.passed());
    CHECK(five.basis_checked == 50);
    CHECK(five.sweep_pairs > 0);

    // A catalog with an element outside the box fails the audit.
    BasisCatalog bad = b;
    bad.elements.push_back(KostkaPair({5}, {2, 1, 1, 1}, 4));
    CHECK_THROWS_AS(width_bound_audit(4, bad), AssertionFailure);
    CHECK_FALSE(width_bound_audit(4, bad, 1, false).passed());
}
