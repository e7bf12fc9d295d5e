#include <doctest.h>

#include "fixture_io.hpp"
#include "kostka/errors.hpp"
#include "kostka/gale_ryser.hpp"
#include "oracles.hpp"

using namespace kostka;

namespace {

const KostkaPair running({8, 7, 7, 7, 3, 2}, {7, 7, 4, 4, 4, 4, 4}, 7);
const KostkaPair small({3, 2, 1}, {2, 2, 1, 1}, 4);

fixture::Rows rows(std::initializer_list<std::vector<int>> r)
{
    return fixture::Rows(r);
}

Partition vec_partition(const oracle::Vec& v)
{
    return Partition(v);
}

}  // namespace

TEST_CASE("initial matrix")
{
    const auto chain = fixture::matrices("running_example/ryser_chain.txt");
    CHECK(fixture::rows_of(initial_matrix({7, 7, 4, 4, 4, 4, 4}, 7, 8)) == chain.front());
    CHECK(fixture::rows_of(initial_matrix({}, 1, 1)) == rows({{0}}));
    CHECK(fixture::rows_of(initial_matrix({2, 1}, 2, 2)) == rows({{1, 1}, {1, 0}}));
    CHECK_THROWS_AS(initial_matrix({3}, 1, 2), WidthTooSmall);
}

TEST_CASE("Ryser chain of the running pair matches the golden fixture")
{
    const auto chain = fixture::matrices("running_example/ryser_chain.txt");
    REQUIRE(chain.size() == 9);
    const CanonicalMatrix a = ryser_canonical(running);
    REQUIRE(a.history.size() == chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CAPTURE(i);
        CHECK(fixture::rows_of(a.history[i]) == chain[i]);
    }
    CHECK(fixture::rows_of(a.entries) == chain.back());
}

TEST_CASE("small canonical matrices")
{
    for (Int n = 1; n <= 6; ++n) {
        const CanonicalMatrix a = ryser_canonical(KostkaPair(Partition{n}, Partition{n}, 1));
        CHECK(a.rows() == 1);
        CHECK(a.cols() == n);
        CHECK(a.entries.row_sums() == std::vector<Int>{n});
    }
    CHECK(fixture::rows_of(ryser_canonical(small).entries) == rows({{1, 1, 0}, {1, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("Gale-Ryser criterion")
{
    CHECK(gr_nonempty({7, 7, 4, 4, 4, 4, 4}, {6, 6, 5, 4, 4, 4, 4, 1}));
    CHECK_FALSE(gr_nonempty({2}, {2}));
    CHECK(gr_nonempty({1, 1}, {2}));
    CHECK_FALSE(gr_nonempty({2}, {1}));
}

TEST_CASE("star matrix")
{
    const auto golden = fixture::matrices("running_example/star.txt");
    const StarMatrix s = star_matrix(ryser_canonical(running));
    CHECK(fixture::rows_of(s.entries) == golden.front());
    CHECK(s.mu_star == std::vector<Int>{0, 3, 0, 0, 0, 0, 4});
    CHECK(s.entries.row_sums() == s.mu_star);

    const StarMatrix one = star_matrix(ryser_canonical(KostkaPair(Partition{4}, Partition{4}, 1)));
    CHECK(fixture::rows_of(one.entries) == rows({{1, 1, 1, 1}}));
    CHECK(fixture::rows_of(star_matrix(ryser_canonical(small)).entries) ==
          rows({{0, 1, -1}, {0, 0, 1}, {1, -1, 0}, {0, 1, 0}}));
}

TEST_CASE("shape sequence")
{
    const ShapeSequence seq = shape_sequence(running);
    const std::vector<Partition> expected{{7, 7, 4, 4, 4, 4, 4}, {7, 6, 4, 4, 4, 4, 4}, {6, 5, 4, 4, 4, 3, 3},
                                          {5, 4, 4, 3, 3, 3, 3}, {4, 3, 3, 3, 3, 3, 2}, {3, 3, 3, 2, 2, 2, 2},
                                          {2, 2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 1, 1},    {}};
    CHECK(seq.chain == expected);
    REQUIRE(seq.steps.size() == 8);
    CHECK(seq.steps[1].kind == StepKind::ShortenAndDelete);
    CHECK(seq.steps[1].shortened_column == 4);
    CHECK(seq.steps[1].deleted_column == 5);

    // A single row loses one column of length 1 at every step.
    const ShapeSequence row = shape_sequence(KostkaPair(Partition{5}, Partition{5}, 1));
    for (Int i = 0; i <= 5; ++i)
        CHECK(row.chain[std::size_t(i)] == (i == 5 ? Partition{} : Partition{5 - i}));
    for (const auto& st : row.steps) {
        CHECK(st.kind == StepKind::DeleteColumn);
        CHECK(st.deleted_length == 1);
    }
}

TEST_CASE("matrix and star reducibility")
{
    const CanonicalMatrix a = ryser_canonical(running);
    const StarMatrix s = star_matrix(a);
    CHECK(is_matrix_reducing_subset(a, {2, 3, 4, 8}));
    CHECK(is_star_reducing_subset(s, {2, 3, 4, 8}));
    std::vector<Int> v(7, 0);
    for (int c : {2, 3, 4, 8})
        for (int i = 0; i < 7; ++i)
            v[std::size_t(i)] += s.entries(i, c - 1);
    CHECK(v == std::vector<Int>{0, 1, 0, 0, 0, 0, 2});
    CHECK(matrix_reducible(a).has_value());
    CHECK(star_reducible(s).has_value());

    const CanonicalMatrix b = ryser_canonical(small);
    CHECK_FALSE(matrix_reducible(b));
    CHECK_FALSE(star_reducible(star_matrix(b)));

    const CanonicalMatrix row = ryser_canonical(KostkaPair(Partition{4}, Partition{4}, 1));
    CHECK(matrix_reducible(row) == ColumnSet{1});
    for (int c = 1; c <= 4; ++c)
        CHECK(is_matrix_reducing_subset(row, {c}));

    const CanonicalMatrix col = ryser_canonical(KostkaPair({1, 1, 1}, {1, 1, 1}, 3));
    CHECK_FALSE(star_reducible(star_matrix(col)));
    CHECK_FALSE(matrix_reducible(col));

    CHECK_THROWS_AS(matrix_reducible(ryser_canonical(KostkaPair(Partition{25}, Partition{25}, 1))),
                    WidthCapExceeded);
}

TEST_CASE("split along a column subset")
{
    const Decomposition d = split_pair(running, {2, 3, 4, 8});
    CHECK(d.bullet.lambda() == Partition{4, 3, 3, 3, 2, 1});
    CHECK(d.bullet.mu() == Partition{3, 3, 2, 2, 2, 2, 2});
    CHECK(d.circ.lambda() == Partition{4, 4, 4, 4, 1, 1});
    CHECK(d.circ.mu() == Partition{4, 4, 2, 2, 2, 2, 2});

    const Decomposition two = split_pair(KostkaPair(Partition{2}, Partition{2}, 1), {1});
    CHECK(two.bullet == KostkaPair(Partition{1}, Partition{1}, 1));
    CHECK(two.circ == KostkaPair(Partition{1}, Partition{1}, 1));

    CHECK_THROWS_AS(split_pair(small, {1}), NotAWitness);
    CHECK_THROWS_AS(split_pair(running, {}), NotAWitness);
    CHECK_THROWS_AS(split_pair(running, {1, 2, 3, 4, 5, 6, 7, 8}), NotAWitness);
    CHECK_THROWS_AS(split_pair(running, {9}), NotAWitness);
}

TEST_CASE("Gale-Ryser agrees with brute-force matrix existence up to 9 boxes")
{
    for (Int n = 0; n <= 9; ++n) {
        const auto ps = oracle::partitions(n, n, n);
        for (const auto& alpha : ps)
            for (const auto& beta : ps)
                CHECK(gr_nonempty(vec_partition(alpha), vec_partition(beta)) == oracle::matrix_exists(alpha, beta));
    }
}

TEST_CASE("canonical matrices are valid up to 12 boxes")
{
    for (Int n = 1; n <= 12; ++n)
        for (const auto& [l, m] : oracle::cone_pairs(n, int(n), n)) {
            const KostkaPair p(vec_partition(l), vec_partition(m), int(m.size()));
            const CanonicalMatrix a = ryser_canonical(p);
            CHECK_NOTHROW(validate_canonical(a));
            CHECK_NOTHROW(validate_star(star_matrix(a)));
            CHECK(a.entries.row_sums() == p.mu().padded(std::size_t(p.rank())));
            CHECK(a.entries.col_sums() == conjugate(p.lambda()).vec());
        }
}

TEST_CASE("matrix, star and brute-force reducibility agree (lambda_1 <= 8, 14 boxes)")
{
    std::size_t pairs = 0, reducible = 0;
    for (Int n = 1; n <= 14; ++n)
        for (const auto& [l, m] : oracle::cone_pairs(n, int(n), 8)) {
            for (int extra = 0; extra <= 1; ++extra) {
                const KostkaPair p(vec_partition(l), vec_partition(m), int(m.size()) + extra);
                const CanonicalMatrix a = ryser_canonical(p);
                const auto w = matrix_reducible(a);
                std::vector<std::vector<Int>> dense(std::size_t(a.rows()));
                for (int i = 0; i < a.rows(); ++i)
                    for (int j = 0; j < a.cols(); ++j)
                        dense[std::size_t(i)].push_back(a.entries(i, j));
                CHECK(w.has_value() == oracle::columns_reducible(dense));
                CHECK(w.has_value() == star_reducible(star_matrix(a)).has_value());
                ++pairs;
                if (w) {
                    ++reducible;
                    const Decomposition d = split_pair(a, *w);
                    CHECK(in_kostka_cone(d.bullet.lambda(), d.bullet.mu(), p.rank()));
                    CHECK(in_kostka_cone(d.circ.lambda(), d.circ.mu(), p.rank()));
                    CHECK(d.bullet + d.circ == p);
                }
            }
        }
    MESSAGE(pairs << " pairs, " << reducible << " matrix-reducible");
}
