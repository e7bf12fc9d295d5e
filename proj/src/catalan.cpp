#include "kostka/catalan.hpp"

#include <algorithm>
#include <charconv>

namespace kostka {

bool CatalanSeq::is_valid(const std::vector<Int>& entries)
{
    if (entries.empty())
        return false;
    Int prefix = 0;
    for (Int x : entries) {
        if (x == 0)
            return false;
        prefix += x;
        if (prefix < 0)
            return false;
    }
    return prefix == 0;
}

CatalanSeq::CatalanSeq(std::vector<Int> entries) : entries_(std::move(entries))
{
    if (!is_valid(entries_))
        throw InvalidSequence("not a generalized Catalan sequence: " + to_string());
}

CatalanSeq CatalanSeq::parse(std::string_view text)
{
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '(' || tok.front() == '+'))
            tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == ')'))
            tok.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidSequence("cannot parse sequence '" + std::string(text) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return CatalanSeq(std::move(out));
}

std::string CatalanSeq::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::vector<Int> run_maxima(const CatalanSeq& x)
{
    std::vector<Int> out;
    const auto& e = x.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Int a = e[i] < 0 ? -e[i] : e[i];
        if (i == 0 || (e[i] > 0) != (e[i - 1] > 0))
            out.push_back(a);
        else
            out.back() = std::max(out.back(), a);
    }
    return out;
}

Int cost(const CatalanSeq& x)
{
    Int total = 0;
    for (Int a : run_maxima(x))
        total = checked_add(total, a);
    return total;
}

Int width(const CatalanSeq& x)
{
    return Int(x.length());
}

namespace {

bool split_ok(const std::vector<Int>& e, Mask mask)
{
    Int in = 0, out = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        ((mask >> i) & 1u ? in : out) += e[i];
        if (in < 0 || out < 0)
            return false;
    }
    return in == 0 && out == 0;
}

}  // namespace

bool is_catalan_split(const CatalanSeq& x, const std::vector<int>& indices)
{
    const int t = int(x.length());
    if (indices.empty() || int(indices.size()) >= t || t > 32)
        return false;
    for (std::size_t k = 0; k < indices.size(); ++k)
        if (indices[k] < 1 || indices[k] > t || (k && indices[k] <= indices[k - 1]))
            return false;
    return split_ok(x.entries(), indices_to_mask(indices));
}

std::optional<std::vector<int>> catalan_reducible(const CatalanSeq& x, int length_cap)
{
    const int t = int(x.length());
    if (t > length_cap)
        throw LengthCapExceeded("sublist search limited to length " + std::to_string(length_cap) + ", got " +
                                std::to_string(t));
    const auto& e = x.entries();
    const Mask full = Mask((std::uint64_t{1} << t) - 1);
    Int total = 0;
    std::optional<Mask> best;
    for_each_gray_subset(t, [&](Mask mask, int bit, bool added) {
        if (bit >= 0)
            total += added ? e[std::size_t(bit)] : -e[std::size_t(bit)];
        if (total != 0 || mask == 0 || mask == full)
            return false;
        if (best && !mask_lex_less(mask, *best))
            return false;
        if (split_ok(e, mask))
            best = mask;
        return false;
    });
    if (!best)
        return std::nullopt;
    return mask_to_indices(*best);
}

std::vector<Int> pair_to_sequence(const KostkaPair& pair)
{
    const std::size_t w = std::size_t(pair.lambda().first());
    const Partition lc = conjugate(pair.lambda());
    const Partition mc = conjugate(pair.mu());
    if (mc.length() > w)
        throw AssertionFailure("mu has more columns than lambda in a cone pair");
    std::vector<Int> x(w);
    for (std::size_t j = 0; j < w; ++j)
        x[j] = mc[j] - lc[j];
    return x;
}

Decomposition split_common_columns(const KostkaPair& pair, const ColumnSet& columns)
{
    const int w = int(pair.lambda().first());
    if (columns.empty() || int(columns.size()) >= w)
        throw NotAWitness("common column set must be a nonempty proper subset");
    const Partition lc = conjugate(pair.lambda());
    const Partition mc = conjugate(pair.mu());
    std::vector<Int> lb, mb, lo, mo;
    std::size_t k = 0;
    for (int j = 1; j <= w; ++j) {
        const bool in = k < columns.size() && columns[k] == j;
        if (in)
            ++k;
        (in ? lb : lo).push_back(lc[std::size_t(j - 1)]);
        (in ? mb : mo).push_back(mc[std::size_t(j - 1)]);
    }
    if (k != columns.size())
        throw NotAWitness("column indices must be sorted and within 1..lambda_1");
    try {
        return {KostkaPair(Partition::from_columns(lb), Partition::from_columns(mb), pair.rank()),
                KostkaPair(Partition::from_columns(lo), Partition::from_columns(mo), pair.rank())};
    } catch (const InvalidPair& e) {
        throw NotAWitness(std::string("common columns do not split the pair: ") + e.what());
    }
}

std::optional<CommonReduction> commonly_reducible(const KostkaPair& pair, int length_cap)
{
    const int w = int(pair.lambda().first());
    if (w > length_cap)
        throw LengthCapExceeded("common reducibility limited to lambda_1 <= " + std::to_string(length_cap) +
                                ", got " + std::to_string(w));
    if (w < 2)
        return std::nullopt;
    const auto x = pair_to_sequence(pair);
    ColumnSet cols;
    if (auto z = std::find(x.begin(), x.end(), 0); z != x.end()) {
        cols = {int(z - x.begin()) + 1};
    } else {
        std::vector<Int> stripped;
        std::vector<int> index;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) {
                stripped.push_back(x[j]);
                index.push_back(int(j) + 1);
            }
        const auto witness = catalan_reducible(CatalanSeq(stripped), length_cap);
        if (!witness)
            return std::nullopt;
        for (int i : *witness)
            cols.push_back(index[std::size_t(i - 1)]);
    }
    try {
        return CommonReduction{cols, split_common_columns(pair, cols)};
    } catch (const NotAWitness& e) {
        throw AssertionFailure(std::string("Catalan witness failed to split the pair: ") + e.what());
    }
}

KimReport kim_theorem_check(const CatalanSeq& x)
{
    if (int(x.length()) > kKimCheckCap)
        throw LengthCapExceeded("cost/width check limited to length " + std::to_string(kKimCheckCap));
    KimReport rep{cost(x), width(x), false, std::nullopt};
    rep.premise = rep.cost < rep.width;
    rep.witness = catalan_reducible(x);
    if (rep.premise && !rep.witness)
        throw AssertionFailure("cost " + std::to_string(rep.cost) + " < width " + std::to_string(rep.width) +
                               " but " + x.to_string() + " is not reducible");
    return rep;
}

CatalanSeq random_catalan(std::mt19937_64& rng, int max_length, Int max_entry)
{
    std::uniform_int_distribution<int> len_dist(2, std::max(2, max_length));
    const int t = len_dist(rng);
    std::vector<Int> out;
    Int prefix = 0;
    for (int i = 0; i < t; ++i) {
        const int left = t - i;
        if (left == 1) {
            out.push_back(-prefix);
            break;
        }
        // After this entry the prefix must stay positive if exactly one slot remains.
        const Int neg_max = left == 2 ? prefix - 1 : prefix;
        const bool go_down = neg_max >= 1 && std::bernoulli_distribution(0.5)(rng);
        Int v;
        if (go_down)
            v = -std::uniform_int_distribution<Int>(1, neg_max)(rng);
        else
            v = std::uniform_int_distribution<Int>(1, max_entry)(rng);
        out.push_back(v);
        prefix += v;
    }
    return CatalanSeq(std::move(out));
}

}  // namespace kostka
