#include "kostka/gale_ryser.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kostka {

std::vector<Int> Grid::row_sums() const
{
    std::vector<Int> out(std::size_t(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[std::size_t(i)] += (*this)(i, j);
    return out;
}

std::vector<Int> Grid::col_sums() const
{
    std::vector<Int> out(std::size_t(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[std::size_t(j)] += (*this)(i, j);
    return out;
}

std::string Grid::to_text() const
{
    const bool signed_entries = std::any_of(data_.begin(), data_.end(), [](auto v) { return v < 0; });
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j)
                os << ' ';
            const int v = (*this)(i, j);
            if (signed_entries && v >= 0)
                os << ' ';
            os << v;
        }
        os << '\n';
    }
    return os.str();
}

const char* to_string(StepKind k)
{
    switch (k) {
    case StepKind::DeleteColumn: return "DeleteColumn";
    case StepKind::ShortenRightmost: return "ShortenRightmost";
    case StepKind::ShortenAndDelete: return "ShortenAndDelete";
    }
    return "?";
}

Grid initial_matrix(const Partition& mu, int rows, int width)
{
    if (mu.first() > width)
        throw WidthTooSmall("width " + std::to_string(width) + " is smaller than mu_1 = " +
                            std::to_string(mu.first()));
    if (static_cast<int>(mu.length()) > rows)
        throw InvalidPartition("mu has more parts than matrix rows");
    Grid g(rows, width);
    for (int i = 0; i < rows; ++i)
        for (Int j = 0; j < mu[std::size_t(i)]; ++j)
            g(i, int(j)) = 1;
    return g;
}

bool gr_nonempty(const Partition& alpha, const Partition& beta)
{
    return dominates(conjugate(alpha), beta);
}

CanonicalMatrix ryser_canonical(const KostkaPair& pair)
{
    const int rows = pair.rank();
    const int width = static_cast<int>(pair.lambda().first());
    const Partition lambda_conj = conjugate(pair.lambda());

    Grid a = initial_matrix(pair.mu(), rows, width);
    std::vector<Grid> history{a};

    // Row sums of the current left submatrix; each of its rows is flush-left.
    std::vector<Int> left = pair.mu().padded(std::size_t(rows));
    std::vector<int> order(static_cast<std::size_t>(rows));

    for (int s = width; s >= 1; --s) {
        const Int need = lambda_conj[std::size_t(s - 1)];
        std::iota(order.begin(), order.end(), 0);
        // Largest row sum first; ties go to the southmost row.
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (left[std::size_t(x)] != left[std::size_t(y)])
                return left[std::size_t(x)] > left[std::size_t(y)];
            return x > y;
        });
        for (Int k = 0; k < need; ++k) {
            const int i = order[std::size_t(k)];
            const Int rs = left[std::size_t(i)];
            ensure(rs >= 1, "Ryser step ran out of ones; pair is outside the cone");
            const int from = int(rs - 1);
            if (from != s - 1) {
                a(i, from) = 0;
                a(i, s - 1) = 1;
            }
            left[std::size_t(i)] = rs - 1;
        }
        for (Int rs : left)
            ensure(rs <= s - 1, "Ryser step left a row longer than the remaining width");
        history.push_back(a);
    }

    CanonicalMatrix out{pair, std::move(a), std::move(history)};
    validate_canonical(out);
    return out;
}

namespace {

struct Runs {
    int count = 0;
    bool first_at_top = false;
};

Runs column_runs(const Grid& g, int j)
{
    Runs r;
    for (int i = 0; i < g.rows(); ++i) {
        if (g(i, j) == 1 && (i == 0 || g(i - 1, j) == 0)) {
            if (r.count == 0)
                r.first_at_top = (i == 0);
            ++r.count;
        }
    }
    return r;
}

}  // namespace

void validate_canonical(const CanonicalMatrix& a)
{
    const auto& g = a.entries;
    ensure(g.rows() == a.pair.rank() && g.cols() == int(a.pair.lambda().first()),
           "canonical matrix has wrong dimensions");
    ensure(g.row_sums() == a.pair.mu().padded(std::size_t(g.rows())), "canonical matrix row sums differ from mu");
    const Partition lc = conjugate(a.pair.lambda());
    ensure(g.col_sums() == lc.vec(), "canonical matrix column sums differ from lambda'");
    for (int j = 0; j < g.cols(); ++j) {
        const Runs r = column_runs(g, j);
        const bool ok = (r.count == 1) || (r.count == 2 && r.first_at_top);
        ensure(ok, "column " + std::to_string(j + 1) + " of A(lambda,mu) has an invalid run pattern");
        if (j == 0)
            ensure(r.count == 1 && r.first_at_top, "leftmost column of A(lambda,mu) is not a top run");
    }
}

StarMatrix star_matrix(const CanonicalMatrix& a)
{
    const auto& g = a.entries;
    StarMatrix s{Grid(g.rows(), g.cols()), {}};
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            s.entries(i, j) = std::int8_t(g(i, j) - (i + 1 < g.rows() ? g(i + 1, j) : 0));
    const auto mu = a.pair.mu().padded(std::size_t(g.rows()));
    s.mu_star.resize(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        s.mu_star[i] = mu[i] - (i + 1 < mu.size() ? mu[i + 1] : 0);
    validate_star(s);
    return s;
}

void validate_star(const StarMatrix& s)
{
    const auto& g = s.entries;
    for (int j = 0; j < g.cols(); ++j) {
        std::vector<int> signs;
        for (int i = 0; i < g.rows(); ++i)
            if (g(i, j) != 0)
                signs.push_back(g(i, j));
        const bool ok = signs == std::vector<int>{1} || signs == std::vector<int>{-1, 1} ||
                        signs == std::vector<int>{1, -1, 1};
        ensure(ok, "column " + std::to_string(j + 1) + " of A* has an invalid sign pattern");
        if (j == 0)
            ensure(signs == std::vector<int>{1}, "leftmost column of A* is not a single +1");
    }
    for (int j = 0; g.rows() > 0 && j < g.cols(); ++j)
        ensure(g(g.rows() - 1, j) != -1, "bottom row of A* contains a -1");
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            if (g(i, j) != -1)
                continue;
            int k = j - 1;
            while (k >= 0 && g(i, k) == 0)
                --k;
            ensure(k >= 0 && g(i, k) == 1, "a -1 in A* lacks a +1 to its left in its row");
        }
    }
    ensure(g.row_sums() == s.mu_star, "rows of A* do not sum to mu*");
}

namespace {

// Multiset differences of two descending column-length lists.
void multiset_diff(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& only_a,
                   std::vector<Int>& only_b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] > b[j]))
            only_a.push_back(a[i++]);
        else if (i == a.size() || b[j] > a[i])
            only_b.push_back(b[j++]);
        else
            ++i, ++j;
    }
}

int first_index_of(const std::vector<Int>& cols, Int len)
{
    auto it = std::find(cols.begin(), cols.end(), len);
    return int(it - cols.begin()) + 1;
}

int last_index_of(const std::vector<Int>& cols, Int len)
{
    auto it = std::find(cols.rbegin(), cols.rend(), len);
    return int(cols.rend() - it);
}

}  // namespace

ShapeSequence shape_sequence(const KostkaPair& pair)
{
    const CanonicalMatrix a = ryser_canonical(pair);
    return shape_sequence(a, star_matrix(a));
}

ShapeSequence shape_sequence(const CanonicalMatrix& a, const StarMatrix& s)
{
    const auto& g = a.entries;
    const int width = g.cols();
    ShapeSequence seq;
    std::vector<Int> sums = a.pair.mu().padded(std::size_t(g.rows()));
    seq.chain.emplace_back(sums);
    for (int i = 1; i <= width; ++i) {
        const int c = width - i;  // 0-based column removed at step i
        for (int row = 0; row < g.rows(); ++row)
            sums[std::size_t(row)] -= g(row, c);
        try {
            seq.chain.emplace_back(sums);
        } catch (const InvalidPartition&) {
            throw AssertionFailure("row sums of a left submatrix do not form a partition");
        }
    }

    for (int i = 1; i <= width; ++i) {
        const auto prev = conjugate(seq.chain[std::size_t(i - 1)]).vec();
        const auto next = conjugate(seq.chain[std::size_t(i)]).vec();
        std::vector<Int> removed, added;
        multiset_diff(prev, next, removed, added);

        ShapeStep step{StepKind::DeleteColumn, width - i + 1};
        std::vector<std::pair<Int, int>> signature;  // (1-based row, sign) expected in A*
        if (removed.size() == 1 && added.empty()) {
            step.kind = StepKind::DeleteColumn;
            step.deleted_length = removed[0];
            step.deleted_column = first_index_of(prev, removed[0]);
            signature = {{removed[0], 1}};
        } else if (removed.size() == 1 && added.size() == 1 && added[0] < removed[0]) {
            step.kind = StepKind::ShortenRightmost;
            step.shortened_from = removed[0];
            step.shortened_to = added[0];
            step.shortened_column = int(prev.size());
            ensure(prev.back() == removed[0], "shortened column is not the rightmost column");
            signature = {{added[0], -1}, {removed[0], 1}};
        } else if (removed.size() == 2 && added.size() == 1 && removed[1] < added[0] &&
                   added[0] < removed[0]) {
            step.kind = StepKind::ShortenAndDelete;
            step.shortened_from = removed[0];
            step.shortened_to = added[0];
            step.deleted_length = removed[1];
            step.shortened_column = last_index_of(prev, removed[0]);
            step.deleted_column = first_index_of(prev, removed[1]);
            ensure(step.deleted_column == step.shortened_column + 1,
                   "deleted column is not immediately right of the shortened column");
            signature = {{removed[1], 1}, {added[0], -1}, {removed[0], 1}};
        } else {
            throw AssertionFailure("shape sequence step " + std::to_string(i) +
                                   " matches none of the three transition cases");
        }
        if (step.kind != StepKind::DeleteColumn)
            ensure(std::find(prev.begin(), prev.end(), step.shortened_to) == prev.end(),
                   "shortened column ties with another column of the next shape");

        std::vector<std::pair<Int, int>> actual;
        for (int row = 0; row < s.entries.rows(); ++row)
            if (int v = s.entries(row, step.matrix_column - 1); v != 0)
                actual.emplace_back(row + 1, v);
        ensure(actual == signature, "A* column " + std::to_string(step.matrix_column) +
                                        " disagrees with the shape sequence step");
        seq.steps.push_back(step);
    }
    return seq;
}

namespace {

bool valid_index_set(const ColumnSet& s, int width)
{
    if (s.empty() || int(s.size()) >= width)
        return false;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > width)
            return false;
        if (k && s[k] <= s[k - 1])
            return false;
    }
    return true;
}

bool weakly_decreasing(const std::vector<Int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1])
            return false;
    return true;
}

bool matrix_predicate(const std::vector<Int>& v, const std::vector<Int>& mu)
{
    if (!weakly_decreasing(v))
        return false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (mu[i] - v[i] > mu[i - 1] - v[i - 1])
            return false;
    return true;
}

bool star_predicate(const std::vector<Int>& v, const std::vector<Int>& mu_star)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] > mu_star[i])
            return false;
    return true;
}

template <class Pred>
std::optional<ColumnSet> search_columns(const Grid& g, int width_cap, Pred&& pred)
{
    const int width = g.cols();
    if (width > width_cap)
        throw WidthCapExceeded("exhaustive column search limited to width " + std::to_string(width_cap) +
                               ", got " + std::to_string(width));
    const Mask full = width == 0 ? 0 : Mask((std::uint64_t{1} << width) - 1);
    std::vector<Int> v(std::size_t(g.rows()), 0);
    std::optional<Mask> best;
    for_each_gray_subset(width, [&](Mask mask, int bit, bool added) {
        if (bit >= 0)
            for (int i = 0; i < g.rows(); ++i)
                v[std::size_t(i)] += added ? g(i, bit) : -g(i, bit);
        if (mask == 0 || mask == full)
            return false;
        if (best && !mask_lex_less(mask, *best))
            return false;
        if (pred(v))
            best = mask;
        return false;
    });
    if (!best)
        return std::nullopt;
    return mask_to_indices(*best);
}

std::vector<Int> column_sum(const Grid& g, const ColumnSet& s)
{
    std::vector<Int> v(std::size_t(g.rows()), 0);
    for (int c : s)
        for (int i = 0; i < g.rows(); ++i)
            v[std::size_t(i)] += g(i, c - 1);
    return v;
}

}  // namespace

bool is_matrix_reducing_subset(const CanonicalMatrix& a, const ColumnSet& s)
{
    if (!valid_index_set(s, a.cols()))
        return false;
    return matrix_predicate(column_sum(a.entries, s), a.pair.mu().padded(std::size_t(a.rows())));
}

bool is_star_reducing_subset(const StarMatrix& s, const ColumnSet& cols)
{
    if (!valid_index_set(cols, s.entries.cols()))
        return false;
    return star_predicate(column_sum(s.entries, cols), s.mu_star);
}

std::optional<ColumnSet> matrix_reducible(const CanonicalMatrix& a, int width_cap)
{
    const auto mu = a.pair.mu().padded(std::size_t(a.rows()));
    return search_columns(a.entries, width_cap, [&](const std::vector<Int>& v) { return matrix_predicate(v, mu); });
}

std::optional<ColumnSet> star_reducible(const StarMatrix& s, int width_cap)
{
    return search_columns(s.entries, width_cap,
                          [&](const std::vector<Int>& v) { return star_predicate(v, s.mu_star); });
}

Decomposition split_pair(const CanonicalMatrix& a, const ColumnSet& s)
{
    if (!is_matrix_reducing_subset(a, s))
        throw NotAWitness("column set is not a reducing subset of A(lambda,mu)");
    const Partition lc = conjugate(a.pair.lambda());
    std::vector<Int> in_cols, out_cols;
    for (int j = 1; j <= a.cols(); ++j)
        (std::binary_search(s.begin(), s.end(), j) ? in_cols : out_cols).push_back(lc[std::size_t(j - 1)]);
    const auto v = column_sum(a.entries, s);
    auto mu = a.pair.mu().padded(std::size_t(a.rows()));
    for (std::size_t i = 0; i < mu.size(); ++i)
        mu[i] -= v[i];
    try {
        return {KostkaPair(Partition::from_columns(in_cols), Partition(v), a.pair.rank()),
                KostkaPair(Partition::from_columns(out_cols), Partition(mu), a.pair.rank())};
    } catch (const InvalidPair& e) {
        throw AssertionFailure(std::string("column split left the cone: ") + e.what());
    }
}

Decomposition split_pair(const KostkaPair& pair, const ColumnSet& s)
{
    return split_pair(ryser_canonical(pair), s);
}

}  // namespace kostka
