#include "kostka/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "kostka/kgr.hpp"
#include "parallel.hpp"

namespace kostka {

namespace {

class Splitter {
public:
    explicit Splitter(const KostkaPair& pair)
        : r_(std::size_t(pair.rank())),
          lambda_(pair.lambda().padded(r_)),
          mu_(pair.mu().padded(r_)),
          rank_(pair.rank()),
          circ_l_(r_),
          circ_m_(r_),
          circ_l_prefix_(r_ + 1, 0),
          slack_(r_ + 1, 0)
    {
        Int pl = 0, pm = 0;
        for (std::size_t t = 0; t < r_; ++t) {
            pl += lambda_[t];
            pm += mu_[t];
            slack_[t + 1] = pl - pm;
        }
    }

    std::optional<Decomposition> search(Int s)
    {
        target_ = s;
        if (split_lambda(0, s))
            return found_;
        return std::nullopt;
    }

private:
    static constexpr Int kInf = std::numeric_limits<Int>::max();

    bool split_lambda(std::size_t i, Int remaining)
    {
        if (i == r_) {
            if (remaining != 0)
                return false;
            for (std::size_t t = 0; t < r_; ++t)
                circ_l_prefix_[t + 1] = circ_l_prefix_[t] + circ_l_[t];
            return split_mu(0, 0);
        }
        const Int prev_circ = i ? circ_l_[i - 1] : kInf;
        const Int prev_bullet = i ? lambda_[i - 1] - circ_l_[i - 1] : kInf;
        const Int hi = std::min({prev_circ, lambda_[i], remaining});
        const Int lo = std::max<Int>(0, lambda_[i] - prev_bullet);
        const Int rows_left = Int(r_ - i);
        for (Int c = hi; c >= lo; --c) {
            if (c * rows_left < remaining)
                break;
            circ_l_[i] = c;
            if (split_lambda(i + 1, remaining - c))
                return true;
        }
        return false;
    }

    // Prefix sums of circ mu stay within [P(circ lambda) - slack, P(circ lambda)]
    // so that both halves satisfy dominance.
    bool split_mu(std::size_t i, Int prefix)
    {
        if (i == r_)
            return prefix == target_ && emit();
        const Int prev_circ = i ? circ_m_[i - 1] : kInf;
        const Int prev_bullet = i ? mu_[i - 1] - circ_m_[i - 1] : kInf;
        Int hi = std::min({prev_circ, mu_[i], circ_l_prefix_[i + 1] - prefix});
        const Int lo = std::max({Int{0}, mu_[i] - prev_bullet, circ_l_prefix_[i + 1] - slack_[i + 1] - prefix});
        const Int rows_left = Int(r_ - i);
        for (Int c = hi; c >= lo; --c) {
            if (c * rows_left < target_ - prefix)
                break;
            circ_m_[i] = c;
            if (split_mu(i + 1, prefix + c))
                return true;
        }
        return false;
    }

    bool emit()
    {
        std::vector<Int> bl(r_), bm(r_);
        for (std::size_t t = 0; t < r_; ++t) {
            bl[t] = lambda_[t] - circ_l_[t];
            bm[t] = mu_[t] - circ_m_[t];
        }
        try {
            found_ = Decomposition{KostkaPair(Partition(bl), Partition(bm), rank_),
                                   KostkaPair(Partition(circ_l_), Partition(circ_m_), rank_)};
        } catch (const Error& e) {
            throw AssertionFailure(std::string("splitting search produced an invalid half: ") + e.what());
        }
        return true;
    }

    std::size_t r_;
    std::vector<Int> lambda_, mu_;
    int rank_;
    std::vector<Int> circ_l_, circ_m_, circ_l_prefix_, slack_;
    Int target_ = 0;
    std::optional<Decomposition> found_;
};

}  // namespace

IrreducibilityResult is_irreducible(const KostkaPair& pair, Int box_cap)
{
    if (pair.size() > box_cap)
        throw SizeCapExceeded("is_irreducible: " + std::to_string(pair.size()) + " boxes exceeds cap " +
                              std::to_string(box_cap));
    if (pair.is_zero())
        return {false, std::nullopt};
    Splitter splitter(pair);
    for (Int s = 1; 2 * s <= pair.size(); ++s)
        if (auto d = splitter.search(s))
            return {false, std::move(d)};
    return {true, std::nullopt};
}

std::vector<KostkaPair> cone_pairs(int r, Int lambda_1_cap, Int max_size)
{
    std::vector<KostkaPair> out;
    for (Int n = 1; n <= max_size; ++n) {
        auto lambdas = partitions_of(n, r, lambda_1_cap);
        auto mus = partitions_of(n, r, n);
        std::reverse(lambdas.begin(), lambdas.end());
        std::reverse(mus.begin(), mus.end());
        for (const auto& l : lambdas)
            for (const auto& m : mus)
                if (dominates(l, m))
                    out.emplace_back(l, m, r);
    }
    return out;
}

BasisCatalog hilbert_basis(int r, int jobs)
{
    if (r < 1 || r > kMaxBasisRank)
        throw RankCapExceeded("hilbert_basis supports 1 <= r <= " + std::to_string(kMaxBasisRank) + ", got " +
                              std::to_string(r));
    const auto candidates = cone_pairs(r, r, Int(r) * r);
    std::vector<char> keep(candidates.size(), 0);
    std::vector<char> fast(candidates.size(), 0);
    detail::parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        if (fast_reducibility(candidates[i])) {
            fast[i] = 1;
            return;
        }
        keep[i] = is_irreducible(candidates[i], Int(r) * r).irreducible;
    });

    BasisCatalog cat;
    cat.rank = r;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i])
            cat.elements.push_back(candidates[i]);
    std::sort(cat.elements.begin(), cat.elements.end());
    const auto n_fast = std::count(fast.begin(), fast.end(), 1);
    cat.notes.push_back("candidates: cone pairs with lambda in the " + std::to_string(r) + "x" + std::to_string(r) +
                        " box (width bound lambda_1 <= r)");
    cat.notes.push_back("candidates examined: " + std::to_string(candidates.size()));
    cat.notes.push_back("discarded by conservative subtree: " + std::to_string(n_fast));
    cat.notes.push_back("remaining candidates decided by exhaustive splitting");
    return cat;
}

bool RaySpec::valid() const
{
    return b > 0 && a >= b && ell >= 0 && a + ell <= rank && rank >= 1;
}

KostkaPair RaySpec::expand() const
{
    if (!valid())
        throw InvalidPair("invalid ray spec " + to_string());
    std::vector<Int> l(std::size_t(b + ell), a);
    std::vector<Int> m(std::size_t(ell), a);
    m.insert(m.end(), std::size_t(a), b);
    return KostkaPair(Partition(std::move(l)), Partition(std::move(m)), rank);
}

std::string RaySpec::to_string() const
{
    return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",ell=" + std::to_string(ell) +
           ",r=" + std::to_string(rank) + ")";
}

std::vector<RaySpec> extremal_rays(int r)
{
    std::vector<RaySpec> out;
    if (r < 1)
        return out;
    for (Int a = 1; a <= r; ++a)
        for (Int b = 1; b <= a; ++b)
            for (Int ell = 0; a + ell <= r; ++ell)
                if (b < a || a == 1)
                    out.push_back({a, b, ell, r});
    return out;
}

Int ray_count_formula(int r)
{
    const Int n = r;
    return n * (n - 1) * (n - 2) / 6 + n * (n - 1) / 2 + n;
}

KostkaPair primitive(const KostkaPair& pair)
{
    Int g = 0;
    for (Int x : pair.lambda().parts())
        g = std::gcd(g, x);
    for (Int x : pair.mu().parts())
        g = std::gcd(g, x);
    if (g <= 1)
        return pair;
    std::vector<Int> l(pair.lambda().vec()), m(pair.mu().vec());
    for (auto& x : l)
        x /= g;
    for (auto& x : m)
        x /= g;
    return KostkaPair(Partition(std::move(l)), Partition(std::move(m)), pair.rank());
}

KostkaPair primitive_point(const RaySpec& spec)
{
    return primitive(spec.expand());
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Normals of the cone inequalities that hold with equality at the pair,
// together with the normal of |lambda| = |mu|. Coordinates: lambda then mu.
std::vector<std::vector<Rational>> tight_normals(const KostkaPair& pair)
{
    const std::size_t r = std::size_t(pair.rank());
    const auto l = pair.lambda().padded(r);
    const auto m = pair.mu().padded(r);
    std::vector<std::vector<Rational>> rows;
    auto blank = [&] { return std::vector<Rational>(2 * r, Rational(0)); };

    for (std::size_t half = 0; half < 2; ++half) {
        const auto& x = half ? m : l;
        const std::size_t off = half * r;
        for (std::size_t i = 0; i < r; ++i) {
            const Int value = x[i] - (i + 1 < r ? x[i + 1] : 0);
            if (value != 0)
                continue;
            auto row = blank();
            row[off + i] = 1;
            if (i + 1 < r)
                row[off + i + 1] = -1;
            rows.push_back(std::move(row));
        }
    }
    Int pl = 0, pm = 0;
    for (std::size_t t = 0; t + 1 < r; ++t) {
        pl += l[t];
        pm += m[t];
        if (pl != pm)
            continue;
        auto row = blank();
        for (std::size_t i = 0; i <= t; ++i) {
            row[i] = 1;
            row[r + i] = -1;
        }
        rows.push_back(std::move(row));
    }
    auto eq = blank();
    for (std::size_t i = 0; i < r; ++i) {
        eq[i] = 1;
        eq[r + i] = -1;
    }
    rows.push_back(std::move(eq));
    return rows;
}

}  // namespace

ExtremalityReport extremality(const KostkaPair& pair)
{
    ExtremalityReport rep{false, false, 0};
    const std::size_t r = std::size_t(pair.rank());
    rep.tight_rank = rational_rank(tight_normals(pair));
    if (pair.is_zero())
        return rep;
    rep.rank_test = rep.tight_rank == 2 * r - 1;
    const KostkaPair p = primitive(pair);
    for (const auto& spec : extremal_rays(pair.rank()))
        if (primitive_point(spec) == p) {
            rep.family_test = true;
            break;
        }
    if (rep.family_test != rep.rank_test)
        throw InconsistentExtremalityTests("extremality tests disagree on " + pair.to_string() +
                                           ": family=" + (rep.family_test ? "yes" : "no") +
                                           ", rank=" + (rep.rank_test ? "yes" : "no"));
    return rep;
}

bool is_extremal(const KostkaPair& pair)
{
    return extremality(pair).family_test;
}

WidthAuditReport width_bound_audit(int r, const BasisCatalog& basis, int jobs, bool throw_on_failure)
{
    WidthAuditReport rep;
    rep.rank = r;
    rep.basis_size = basis.elements.size();
    auto fail = [&](const KostkaPair& p, std::string note) {
        if (throw_on_failure)
            throw AssertionFailure("width bound audit failed on " + p.to_string() + ": " + note);
        rep.failures.push_back({p, false, std::move(note)});
    };

    for (const auto& p : basis.elements) {
        ++rep.basis_checked;
        if (p.lambda().first() > r)
            fail(p, "lambda_1 exceeds r");
        else if (p.lambda().first() == r) {
            ++rep.rectangle_pairs;
            if (!p.lambda().is_rectangle() || !p.mu().is_rectangle())
                fail(p, "lambda_1 = r but the pair is not a rectangle pair");
        }
    }

    std::vector<KostkaPair> sweep;
    for (auto& p : cone_pairs(r, Int(r) + 1, Int(r) * (r + 1)))
        if (p.lambda().first() == r + 1)
            sweep.push_back(std::move(p));
    rep.sweep_pairs = sweep.size();
    std::vector<char> verdict(sweep.size(), 0);  // 1 fast, 2 exhaustive, 0 irreducible
    detail::parallel_for(sweep.size(), jobs, [&](std::size_t i) {
        if (fast_reducibility(sweep[i]))
            verdict[i] = 1;
        else if (!is_irreducible(sweep[i], Int(r) * (r + 1)).irreducible)
            verdict[i] = 2;
    });
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (verdict[i] == 1)
            ++rep.sweep_fast;
        if (verdict[i] == 0)
            fail(sweep[i], "lambda_1 = r + 1 but the pair is irreducible");
    }
    return rep;
}

WidthAuditReport width_bound_audit(int r, int jobs)
{
    return width_bound_audit(r, hilbert_basis(r, jobs), jobs, true);
}

}  // namespace kostka
