#include "kostka/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kostka {

Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

Int checked_sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidPartition("negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
        size_ = checked_add(size_, parts_[i]);
    }
}

Partition Partition::from_columns(std::vector<Int> column_lengths)
{
    std::erase(column_lengths, 0);
    for (Int c : column_lengths)
        if (c < 0)
            throw InvalidPartition("negative column length");
    std::sort(column_lengths.begin(), column_lengths.end(), std::greater<>());
    return conjugate(Partition(std::move(column_lengths)));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<Int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '['))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = trim(text.substr(pos, comma - pos));
        Int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidPartition("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Int> Partition::padded(std::size_t r) const
{
    if (r < parts_.size())
        throw InvalidPartition("partition has more than " + std::to_string(r) + " parts");
    std::vector<Int> out(parts_);
    out.resize(r, 0);
    return out;
}

bool Partition::is_rectangle() const
{
    return std::all_of(parts_.begin(), parts_.end(), [&](Int p) { return p == parts_.front(); });
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition operator+(const Partition& a, const Partition& b)
{
    std::vector<Int> out(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_add(a[i], b[i]);
    return Partition(std::move(out));
}

Partition conjugate(const Partition& p)
{
    std::vector<Int> out(static_cast<std::size_t>(p.first()), 0);
    for (Int part : p.parts())
        for (Int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool prefix_dominates(const Partition& a, const Partition& b)
{
    const std::size_t n = std::max(a.length(), b.length());
    Int sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb)
            return false;
    }
    return true;
}

bool dominates(const Partition& a, const Partition& b)
{
    return a.size() == b.size() && prefix_dominates(a, b);
}

bool in_kostka_cone(const Partition& lambda, const Partition& mu, int rank)
{
    if (rank < 1)
        return false;
    const auto r = static_cast<std::size_t>(rank);
    return lambda.length() <= r && mu.length() <= r && dominates(lambda, mu);
}

bool kostka_positive(const Partition& lambda, const Partition& mu)
{
    return dominates(lambda, mu);
}

namespace {

// Row-major filling of the Young diagram of `shape`; cell (i, j) must be
// >= its left neighbour and > the cell above.
class TableauCounter {
public:
    TableauCounter(const Partition& shape, const Partition& content)
        : shape_(shape), remaining_(content.vec()), grid_(shape.length())
    {
        for (std::size_t i = 0; i < shape.length(); ++i)
            grid_[i].assign(static_cast<std::size_t>(shape[i]), 0);
    }

    Int count() { return fill(0, 0); }

private:
    Int fill(std::size_t row, std::size_t col)
    {
        if (row == shape_.length())
            return 1;
        if (col == static_cast<std::size_t>(shape_[row]))
            return fill(row + 1, 0);
        Int lo = static_cast<Int>(row) + 1;
        if (col > 0)
            lo = std::max(lo, grid_[row][col - 1]);
        if (row > 0)
            lo = std::max(lo, grid_[row - 1][col] + 1);
        Int total = 0;
        for (Int v = lo; v <= static_cast<Int>(remaining_.size()); ++v) {
            auto& left = remaining_[static_cast<std::size_t>(v - 1)];
            if (left == 0)
                continue;
            --left;
            grid_[row][col] = v;
            total = checked_add(total, fill(row, col + 1));
            ++left;
        }
        return total;
    }

    const Partition& shape_;
    std::vector<Int> remaining_;
    std::vector<std::vector<Int>> grid_;
};

void partitions_rec(Int remaining, Int max_parts, Int max_part, std::vector<Int>& cur,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0)
        return;
    for (Int p = std::min(remaining, max_part); p >= 1; --p) {
        if (p * max_parts < remaining)
            break;
        cur.push_back(p);
        partitions_rec(remaining - p, max_parts - 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Int kostka_count(const Partition& lambda, const Partition& mu, Int box_cap)
{
    if (lambda.size() > box_cap || mu.size() > box_cap)
        throw SizeCapExceeded("kostka_count: " + std::to_string(lambda.size()) +
                              " boxes exceeds cap " + std::to_string(box_cap));
    if (lambda.size() != mu.size())
        return 0;
    return TableauCounter(lambda, mu).count();
}

std::vector<Partition> partitions_of(Int n, Int max_parts, Int max_part)
{
    std::vector<Partition> out;
    std::vector<Int> cur;
    if (n < 0)
        return out;
    partitions_rec(n, max_parts, max_part, cur, out);
    return out;
}

std::vector<Partition> partitions_of(Int n)
{
    return partitions_of(n, n, n);
}

KostkaPair::KostkaPair(Partition lambda, Partition mu, int rank)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), rank_(rank)
{
    if (rank_ < 1)
        throw InvalidPair("rank must be positive");
    if (!in_kostka_cone(lambda_, mu_, rank_))
        throw InvalidPair("(" + lambda_.to_string() + "; " + mu_.to_string() +
                          ") is not in the Kostka cone of rank " + std::to_string(rank_));
}

std::string KostkaPair::to_string() const
{
    return "((" + lambda_.to_string() + "),(" + mu_.to_string() + "))";
}

KostkaPair operator+(const KostkaPair& a, const KostkaPair& b)
{
    if (a.rank() != b.rank())
        throw InvalidPair("cannot add pairs of different rank");
    return KostkaPair(a.lambda() + b.lambda(), a.mu() + b.mu(), a.rank());
}

}  // namespace kostka
