#include "kostka/hardness.hpp"

#include <algorithm>
#include <charconv>

#include "kostka/semigroup.hpp"

namespace kostka {

SubsetSumInstance::SubsetSumInstance(std::vector<Int> v, Int b) : values(std::move(v)), target(b)
{
    if (values.empty())
        throw InvalidInstance("subset sum instance needs at least one value");
    for (Int a : values)
        if (a <= 0)
            throw InvalidInstance("subset sum values must be positive");
    if (target <= 0)
        throw InvalidInstance("subset sum target must be positive");
}

SubsetSumInstance SubsetSumInstance::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InvalidInstance("expected 'a1,...,ad : b'");
    auto number = [&](std::string_view tok) {
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidInstance("cannot parse '" + std::string(tok) + "' in instance");
        return v;
    };
    std::vector<Int> values;
    std::string_view head = text.substr(0, colon);
    std::size_t pos = 0;
    while (pos <= head.size()) {
        std::size_t comma = head.find(',', pos);
        if (comma == std::string_view::npos)
            comma = head.size();
        values.push_back(number(head.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return SubsetSumInstance(std::move(values), number(text.substr(colon + 1)));
}

Int SubsetSumInstance::total() const
{
    Int s = 0;
    for (Int a : values)
        s = checked_add(s, a);
    return s;
}

std::string SubsetSumInstance::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out + " : " + std::to_string(target);
}

std::optional<std::vector<int>> subset_sum_oracle(const SubsetSumInstance& inst)
{
    const int d = int(inst.values.size());
    if (d > kSubsetSumCap)
        throw SizeCapExceeded("subset sum oracle limited to " + std::to_string(kSubsetSumCap) + " values");
    Int sum = 0;
    std::optional<Mask> best;
    for_each_gray_subset(d, [&](Mask mask, int bit, bool added) {
        if (bit >= 0)
            sum += added ? inst.values[std::size_t(bit)] : -inst.values[std::size_t(bit)];
        if (sum == inst.target && mask != 0 && (!best || mask_lex_less(mask, *best)))
            best = mask;
        return false;
    });
    if (!best)
        return std::nullopt;
    return mask_to_indices(*best);
}

KostkaPair reduce_to_kostka(const SubsetSumInstance& inst)
{
    const Int total = inst.total();
    if (inst.target > total)
        throw InvalidInstance("target exceeds the total; the instance is trivially negative");
    std::vector<Int> sorted = inst.values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const Int long_col = checked_add(checked_add(total, 1), total - inst.target);

    std::vector<Int> lambda_cols{total + 1};
    lambda_cols.insert(lambda_cols.end(), sorted.begin(), sorted.end());
    const Partition lambda = Partition::from_columns(lambda_cols);
    const Partition mu = Partition::from_columns({long_col, inst.target});
    try {
        return KostkaPair(lambda, mu, int(long_col));
    } catch (const InvalidPair& e) {
        throw AssertionFailure(std::string("reduction output is outside the cone: ") + e.what());
    }
}

Decomposition subset_decomposition(const SubsetSumInstance& inst, const std::vector<int>& subset)
{
    const Int total = inst.total();
    const int d = int(inst.values.size());
    std::vector<bool> chosen(std::size_t(d), false);
    Int sum = 0;
    for (int i : subset) {
        if (i < 1 || i > d || chosen[std::size_t(i - 1)])
            throw NotAWitness("subset indices must be distinct and within 1..d");
        chosen[std::size_t(i - 1)] = true;
        sum += inst.values[std::size_t(i - 1)];
    }
    if (subset.empty() || sum != inst.target)
        throw NotAWitness("subset does not sum to the target");

    std::vector<Int> in_cols, out_cols{total + 1};
    for (int i = 0; i < d; ++i)
        (chosen[std::size_t(i)] ? in_cols : out_cols).push_back(inst.values[std::size_t(i)]);
    const Int long_col = 2 * total + 1 - inst.target;
    const int rank = int(long_col);
    try {
        return {KostkaPair(Partition::from_columns(in_cols), Partition::from_columns({inst.target}), rank),
                KostkaPair(Partition::from_columns(out_cols), Partition::from_columns({long_col}), rank)};
    } catch (const InvalidPair& e) {
        throw AssertionFailure(std::string("subset splitting left the cone: ") + e.what());
    }
}

ReductionReport reduction_equivalence_check(const SubsetSumInstance& inst, Int box_cap)
{
    const KostkaPair pair = reduce_to_kostka(inst);
    ensure(dominates(pair.lambda(), pair.mu()), "reduced lambda does not dominate mu");
    auto subset = subset_sum_oracle(inst);
    const bool reducible = !is_irreducible(pair, box_cap).irreducible;
    ensure(reducible == subset.has_value(), "subset sum verdict disagrees with reducibility of " +
                                                pair.to_string() + " for instance " + inst.to_string());
    std::optional<Decomposition> cert;
    if (subset) {
        cert = subset_decomposition(inst, *subset);
        ensure(cert->bullet + cert->circ == pair, "subset decomposition does not sum to the reduced pair");
    }
    return {inst, pair, std::move(subset), reducible, std::move(cert), 2 * std::size_t(pair.rank())};
}

}  // namespace kostka
