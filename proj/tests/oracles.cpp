#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

Int at(const Vec& v, std::size_t i)
{
    return i < v.size() ? v[i] : 0;
}

Vec trim(Vec v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

bool decreasing(const Vec& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1] || v[i] < 0)
            return false;
    return v.empty() || v.back() >= 0;
}

// Every vector c with 0 <= c_i <= whole_i such that both c and whole - c are
// weakly decreasing.
std::vector<Vec> halves(const Vec& whole)
{
    std::vector<Vec> out;
    Vec cur(whole.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == whole.size()) {
            out.push_back(cur);
            return;
        }
        for (Int c = 0; c <= whole[i]; ++c) {
            if (i > 0 && (c > cur[i - 1] || whole[i] - c > whole[i - 1] - cur[i - 1]))
                continue;
            cur[i] = c;
            go(i + 1);
        }
    };
    go(0);
    return out;
}

Int total(const Vec& v)
{
    return std::accumulate(v.begin(), v.end(), Int{0});
}

}  // namespace

std::vector<Vec> partitions(Int n, Int max_len, Int max_part)
{
    std::vector<Vec> out;
    Vec cur;
    std::function<void(Int, Int)> go = [&](Int left, Int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (Int(cur.size()) == max_len)
            return;
        for (Int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            go(left - p, p);
            cur.pop_back();
        }
    };
    go(n, max_part);
    return out;
}

Vec conjugate(const Vec& p)
{
    Vec c;
    for (Int j = 1; j <= at(p, 0); ++j) {
        Int n = 0;
        for (Int x : p)
            n += x >= j;
        c.push_back(n);
    }
    return c;
}

bool dominates(const Vec& a, const Vec& b)
{
    if (total(a) != total(b))
        return false;
    Int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += at(a, i);
        sb += at(b, i);
        if (sa < sb)
            return false;
    }
    return true;
}

std::vector<std::pair<Vec, Vec>> cone_pairs(Int n, int r, Int max_part)
{
    std::vector<std::pair<Vec, Vec>> out;
    const auto all = partitions(n, r, n);
    for (const auto& l : all) {
        if (at(l, 0) > max_part)
            continue;
        for (const auto& m : all)
            if (dominates(l, m))
                out.emplace_back(l, m);
    }
    return out;
}

bool matrix_exists(const Vec& rows, const Vec& cols)
{
    if (total(rows) != total(cols))
        return false;
    const int nc = int(cols.size());
    Vec left = cols;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == rows.size())
            return std::all_of(left.begin(), left.end(), [](Int x) { return x == 0; });
        for (std::uint32_t m = 0; m < (1u << nc); ++m) {
            if (std::popcount(m) != rows[i])
                continue;
            bool ok = true;
            for (int j = 0; j < nc; ++j)
                if ((m >> j & 1u) && left[std::size_t(j)] == 0)
                    ok = false;
            if (!ok)
                continue;
            for (int j = 0; j < nc; ++j)
                left[std::size_t(j)] -= (m >> j) & 1u;
            const bool found = go(i + 1);
            for (int j = 0; j < nc; ++j)
                left[std::size_t(j)] += (m >> j) & 1u;
            if (found)
                return true;
        }
        return false;
    };
    return go(0);
}

std::vector<std::pair<Vec, Vec>> splittings(const Vec& lambda, const Vec& mu, int r)
{
    std::vector<std::pair<Vec, Vec>> out;
    Vec l = lambda, m = mu;
    l.resize(std::size_t(r), 0);
    m.resize(std::size_t(r), 0);
    const Int n = total(l);
    const auto mu_halves = halves(m);
    for (const auto& lc : halves(l)) {
        const Int s = total(lc);
        if (s == 0 || s == n)
            continue;
        Vec lb(l.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            lb[i] = l[i] - lc[i];
        for (const auto& mc : mu_halves) {
            if (total(mc) != s)
                continue;
            Vec mb(m.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                mb[i] = m[i] - mc[i];
            if (dominates(lc, mc) && dominates(lb, mb))
                out.emplace_back(trim(lc), trim(mc));
        }
    }
    return out;
}

bool reducible(const Vec& lambda, const Vec& mu, int r)
{
    return !splittings(lambda, mu, r).empty();
}

bool columns_reducible(const std::vector<Vec>& a)
{
    const int rows = int(a.size());
    const int cols = rows ? int(a[0].size()) : 0;
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << cols); ++m) {
        Vec in(std::size_t(rows), 0), out(std::size_t(rows), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                ((m >> j) & 1u ? in : out)[std::size_t(i)] += a[std::size_t(i)][std::size_t(j)];
        if (decreasing(in) && decreasing(out))
            return true;
    }
    return false;
}

bool subset_sum(const Vec& values, Int target)
{
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << values.size()); ++m) {
        Int s = 0;
        for (std::size_t i = 0; i < values.size(); ++i)
            if ((m >> i) & 1u)
                s += values[i];
        if (s == target)
            return true;
    }
    return false;
}

bool is_catalan(const Vec& x)
{
    if (x.empty())
        return false;
    Int s = 0;
    for (Int v : x) {
        if (v == 0)
            return false;
        s += v;
        if (s < 0)
            return false;
    }
    return s == 0;
}

bool catalan_split_exists(const Vec& x)
{
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << x.size()); ++m) {
        Vec a, b;
        for (std::size_t i = 0; i < x.size(); ++i)
            ((m >> i) & 1u ? a : b).push_back(x[i]);
        if (is_catalan(a) && is_catalan(b))
            return true;
    }
    return false;
}

Int pieri(const Vec& lambda, Int m, const Vec& nu)
{
    const Vec l = trim(lambda), n = trim(nu);
    if (total(n) != total(l) + m || n.size() > l.size() + 1)
        return 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < at(l, i))
            return 0;
        if (i > 0 && n[i] > l[i - 1])
            return 0;
    }
    return at(l, n.size()) == 0 ? 1 : 0;
}

}  // namespace oracle
