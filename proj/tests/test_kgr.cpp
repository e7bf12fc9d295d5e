#include <algorithm>
#include <set>

#include <doctest.h>

#include "fixture_io.hpp"
#include "kostka/errors.hpp"
#include "kostka/kgr.hpp"
#include "oracles.hpp"

using namespace kostka;

namespace {

const KostkaPair running({8, 7, 7, 7, 3, 2}, {7, 7, 4, 4, 4, 4, 4}, 7);
const KostkaPair small({3, 2, 1}, {2, 2, 1, 1}, 4);

KgrGraph graph_of(const KostkaPair& p)
{
    return KgrGraph::build(star_matrix(ryser_canonical(p)));
}

fixture::ArcRow arc_row(const KgrGraph& g, const Arc& a)
{
    const Vertex& x = g.vertices()[std::size_t(a.from)];
    const Vertex& y = g.vertices()[std::size_t(a.to)];
    return {x.row, x.col, y.row, y.col};
}

std::vector<fixture::ArcRow> sorted_arcs(const KgrGraph& g, const std::vector<int>& which)
{
    std::vector<fixture::ArcRow> out;
    for (int i : which)
        out.push_back(arc_row(g, g.arcs()[std::size_t(i)]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> all_arcs(const KgrGraph& g)
{
    std::vector<int> v(g.arcs().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = int(i);
    return v;
}

// Axis-aligned arcs may only meet at a shared endpoint.
bool planar(const KgrGraph& g)
{
    struct Seg {
        int r0, r1, c0, c1;
    };
    std::vector<Seg> segs;
    for (const Arc& a : g.arcs()) {
        const auto& x = g.vertices()[std::size_t(a.from)];
        const auto& y = g.vertices()[std::size_t(a.to)];
        segs.push_back({std::min(x.row, y.row), std::max(x.row, y.row), std::min(x.col, y.col),
                        std::max(x.col, y.col)});
    }
    const auto& arcs = g.arcs();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s = segs[i], &t = segs[j];
            const int r0 = std::max(s.r0, t.r0), r1 = std::min(s.r1, t.r1);
            const int c0 = std::max(s.c0, t.c0), c1 = std::min(s.c1, t.c1);
            if (r0 > r1 || c0 > c1)
                continue;
            if (r0 != r1 || c0 != c1)
                return false;
            std::set<int> ends{arcs[i].from, arcs[i].to};
            const int id = g.id_at(r0, c0);
            if (id < 0 || !ends.count(id) || (arcs[j].from != id && arcs[j].to != id))
                return false;
        }
    return true;
}

}  // namespace

TEST_CASE("graph of the running pair matches the golden arcs")
{
    const KgrGraph g = graph_of(running);
    const auto golden = fixture::arcs("running_example/arcs.txt");
    CHECK(golden.size() == 20);
    auto expected = golden;
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_arcs(g, all_arcs(g)) == expected);
    CHECK(is_connected(g));
    CHECK(planar(g));
}

TEST_CASE("graphs of single rows and columns")
{
    for (Int n = 1; n <= 5; ++n) {
        const KgrGraph g = graph_of(KostkaPair(Partition{n}, Partition{n}, 1));
        CHECK(g.vertices().size() == std::size_t(n));
        CHECK(g.arcs().empty());
        CHECK(is_connected(g) == (n == 1));
        const auto w = find_conservative_subtree(g);
        if (n == 1) {
            CHECK_FALSE(w.has_value());
            continue;
        }
        REQUIRE(w.has_value());
        CHECK(w->kind == WitnessKind::FullComponent);
        CHECK(verify_subtree(g, *w));
    }
    const KgrGraph col = graph_of(KostkaPair({1, 1, 1}, {1, 1, 1}, 3));
    CHECK(col.cols() == 1);
    CHECK(is_connected(col));
}

TEST_CASE("graph of the small irreducible-by-columns pair")
{
    const KgrGraph g = graph_of(small);
    const std::vector<fixture::ArcRow> expected{{1, 2, 3, 2}, {1, 3, 1, 2}, {2, 3, 1, 3}, {3, 2, 3, 1}, {4, 2, 3, 2}};
    CHECK(sorted_arcs(g, all_arcs(g)) == expected);
    for (const Arc& a : g.arcs()) {
        const auto r = arc_row(g, a);
        CHECK(a.vertical == (r.from_col == r.to_col));
    }
    CHECK_FALSE(find_conservative_subtree(g));
    CHECK_FALSE(fast_reducibility(small));
}

TEST_CASE("red conservative subtree of the running pair")
{
    const KgrGraph g = graph_of(running);
    const auto w = find_conservative_subtree(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::SinkSource);
    CHECK(std::string(to_string(w->kind)) == "C2");
    CHECK(w->columns(g) == ColumnSet{2, 3, 4, 8});
    CHECK(w->vertices.size() == 11);

    auto red = fixture::arcs("running_example/red_arcs.txt");
    std::sort(red.begin(), red.end());
    CHECK(sorted_arcs(g, w->arcs) == red);

    std::vector<int> sinks;
    for (int v : w->vertices)
        if (std::none_of(w->arcs.begin(), w->arcs.end(), [&](int a) { return g.arcs()[std::size_t(a)].from == v; }))
            sinks.push_back(v);
    REQUIRE(sinks.size() == 1);
    CHECK(g.vertices()[std::size_t(sinks[0])] == Vertex{6, 2, -1});
    CHECK(verify_subtree(g, *w));

    SubtreeWitness cut = *w;
    cut.vertices.erase(std::find(cut.vertices.begin(), cut.vertices.end(), sinks[0]));
    std::erase_if(cut.arcs, [&](int a) { return g.arcs()[std::size_t(a)].to == sinks[0]; });
    CHECK_FALSE(verify_subtree(g, cut));
}

TEST_CASE("one full component of a disconnected graph is a witness")
{
    const KgrGraph g = graph_of(KostkaPair({2, 2}, {2, 2}, 2));
    CHECK_FALSE(is_connected(g));
    const auto comp = g.components();
    SubtreeWitness w{{}, {}, WitnessKind::FullComponent};
    for (std::size_t v = 0; v < comp.size(); ++v)
        if (comp[v] == comp[0])
            w.vertices.push_back(int(v));
    for (std::size_t a = 0; a < g.arcs().size(); ++a)
        if (comp[std::size_t(g.arcs()[a].from)] == comp[0])
            w.arcs.push_back(int(a));
    CHECK(verify_subtree(g, w));
}

TEST_CASE("fast reducibility")
{
    const auto f = fast_reducibility(running);
    REQUIRE(f.has_value());
    CHECK(f->columns == ColumnSet{2, 3, 4, 8});
    CHECK(f->parts.bullet.lambda() == Partition{4, 3, 3, 3, 2, 1});
    CHECK(f->parts.bullet + f->parts.circ == running);

    for (int r = 1; r <= 6; ++r)
        for (Int t = 1; t <= r; ++t) {
            CAPTURE(r);
            CAPTURE(t);
            CHECK_FALSE(fast_reducibility(KostkaPair(Partition{t}, Partition(std::vector<Int>(std::size_t(t), 1)), r)));
        }
}

TEST_CASE("malformed star matrices are rejected")
{
    StarMatrix s;
    s.entries = Grid(1, 2);
    s.entries(0, 0) = -1;
    s.entries(0, 1) = 1;
    s.mu_star = {0};
    CHECK_THROWS_AS(KgrGraph::build(s), AssertionFailure);
}

TEST_CASE("criterion equivalence and witness soundness (lambda_1 <= 8, 14 boxes)")
{
    std::size_t pairs = 0, fast = 0;
    for (Int n = 1; n <= 14; ++n)
        for (const auto& [l, m] : oracle::cone_pairs(n, int(n), 8)) {
            const KostkaPair p{Partition(l), Partition(m), int(m.size())};
            const CanonicalMatrix a = ryser_canonical(p);
            const StarMatrix s = star_matrix(a);
            const KgrGraph g = KgrGraph::build(s);
            if (g.rows() <= 12 && g.cols() <= 12)
                CHECK(planar(g));
            const auto w = find_conservative_subtree(g);
            CHECK(w.has_value() == matrix_reducible(a).has_value());
            ++pairs;
            if (!w)
                continue;
            ++fast;
            CHECK(verify_subtree(g, *w));
            CHECK(is_star_reducing_subset(s, w->columns(g)));
            const auto f = fast_reducibility(p);
            REQUIRE(f.has_value());
            CHECK(in_kostka_cone(f->parts.bullet.lambda(), f->parts.bullet.mu(), p.rank()));
            CHECK(in_kostka_cone(f->parts.circ.lambda(), f->parts.circ.mu(), p.rank()));
            CHECK(f->parts.bullet + f->parts.circ == p);
        }
    MESSAGE(pairs << " pairs, " << fast << " with a conservative subtree");
}

TEST_CASE("dot export")
{
    const KgrGraph g = graph_of(running);
    const auto w = find_conservative_subtree(g);
    const std::string dot = to_dot(g, &*w);
    CHECK(dot.rfind("digraph kgr {", 0) == 0);
    CHECK(dot.find("v6_2") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot == to_dot(g, &*w));
    CHECK(to_dot(g).find("color=red") == std::string::npos);
}
