#include "kostka/littlewood_richardson.hpp"

#include <numeric>

namespace kostka {

namespace {

class SkewFiller {
public:
    SkewFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), nu_(nu), content_(mu.vec()), used_(mu.length() + 1, 0), grid_(nu.length())
    {
        for (std::size_t i = 0; i < nu.length(); ++i)
            grid_[i].assign(std::size_t(nu[i]), 0);
    }

    Int count() { return fill(0, std::size_t(nu_[0])); }

private:
    // Cells are visited row by row, right to left; `col` is one past the cell.
    Int fill(std::size_t row, std::size_t col)
    {
        while (row < nu_.length() && col == std::size_t(lambda_[row])) {
            ++row;
            col = std::size_t(nu_[row]);
        }
        if (row >= nu_.length())
            return 1;
        const std::size_t j = col - 1;
        Int hi = Int(content_.size());
        if (j + 1 < std::size_t(nu_[row]))
            hi = std::min(hi, grid_[row][j + 1]);
        Int lo = 1;
        if (row > 0 && j >= std::size_t(lambda_[row - 1]))
            lo = grid_[row - 1][j] + 1;
        Int total = 0;
        for (Int v = lo; v <= hi; ++v) {
            const std::size_t k = std::size_t(v);
            if (used_[k] == content_[k - 1])
                continue;
            if (k > 1 && used_[k] + 1 > used_[k - 1])
                continue;  // ballot
            ++used_[k];
            grid_[row][j] = v;
            total = checked_add(total, fill(row, j));
            --used_[k];
        }
        return total;
    }

    const Partition& lambda_;
    const Partition& nu_;
    std::vector<Int> content_;
    std::vector<Int> used_;
    std::vector<std::vector<Int>> grid_;
};

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, Int box_cap)
{
    for (std::size_t i = 0; i < lambda.length(); ++i)
        if (lambda[i] > nu[i])
            throw ShapeError("(" + lambda.to_string() + ") is not contained in (" + nu.to_string() + ")");
    if (nu.size() > box_cap)
        throw SizeCapExceeded("lr_coefficient: " + std::to_string(nu.size()) + " boxes exceeds cap " +
                              std::to_string(box_cap));
    if (lambda.size() + mu.size() != nu.size())
        return 0;
    if (nu.size() == lambda.size())
        return 1;
    return SkewFiller(lambda, mu, nu).count();
}

std::string LrTriple::to_string() const
{
    return "((" + lambda.to_string() + "),(" + mu.to_string() + "),(" + nu.to_string() + "))";
}

LrTriple counterexample_family(int k)
{
    if (k < 2)
        throw InvalidPair("the family starts at k = 2");
    const Int K = k;
    std::vector<Int> l(std::size_t(k - 1), K);
    l.insert(l.end(), std::size_t(k), K - 1);
    std::vector<Int> m;
    for (Int j = K - 1; j >= 1; --j)
        m.insert(m.end(), 3, checked_mul(j, K - 1));
    std::vector<Int> n(2, checked_mul(K, K - 1));
    n.insert(n.end(), m.begin(), m.end());
    LrTriple t{Partition(std::move(l)), Partition(std::move(m)), Partition(std::move(n)), 3 * k - 1};

    ensure(t.lambda.size() == 2 * K * (K - 1), "family: |lambda| != 2k(k-1)");
    ensure(2 * t.mu.size() == 3 * K * (K - 1) * (K - 1), "family: |mu| != (3/2)k(k-1)^2");
    ensure(t.lambda.size() + t.mu.size() == t.nu.size(), "family: |lambda| + |mu| != |nu|");
    ensure(t.nu.first() == K * (K - 1), "family: nu_1 != k(k-1)");
    ensure(int(t.nu.length()) <= t.rank && int(t.lambda.length()) <= t.rank && int(t.mu.length()) <= t.rank,
           "family: a partition is longer than the rank");
    return t;
}

FamilyReport verify_counterexample(int k_max, Int box_cap)
{
    FamilyReport rep;
    for (int k = 2; k <= k_max; ++k) {
        const LrTriple t = counterexample_family(k);
        const Int third = (Int(t.rank) + 1) / 3;
        ensure((t.rank + 1) % 3 == 0 && t.nu.first() == third * (third - 1), "family: nu_1 formula in r fails");
        ensure(std::gcd(t.lambda[0], t.lambda[std::size_t(k - 1)]) == 1, "family: lambda_1 and lambda_k share a factor");
        FamilyRow row{k, t.rank, t.nu.first(), t.lambda.size(), t.mu.size(), t.nu.size(), t.nu.first() > t.rank, {}};
        ensure(row.exceeds_rank == (k >= 4), "family: nu_1 > r should hold exactly from k = 4");
        if (t.nu.size() <= box_cap) {
            row.coefficient = lr_coefficient(t.lambda, t.mu, t.nu, box_cap);
            ensure(*row.coefficient >= 1, "family: coefficient vanishes at k = " + std::to_string(k));
        }
        if (row.exceeds_rank && rep.first_violation == 0)
            rep.first_violation = k;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace kostka
