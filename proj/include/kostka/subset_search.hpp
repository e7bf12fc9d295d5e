#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kostka {

using Mask = std::uint32_t;

inline constexpr int kSubsetSearchCap = 24;

/// Visits every subset of {0, ..., n-1} in reflected Gray-code order, starting
/// from the empty set. After the first call, consecutive masks differ in one
/// bit; visit(mask, flipped_bit, added) receives that bit (-1 on the first
/// call). Returning true from visit stops the walk.
template <class Visit>
bool for_each_gray_subset(int n, Visit&& visit)
{
    if (visit(Mask{0}, -1, false))
        return true;
    const std::uint64_t total = std::uint64_t{1} << n;
    Mask mask = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int bit = std::countr_zero(k);
        mask ^= Mask{1} << bit;
        if (visit(mask, bit, (mask >> bit) & 1u))
            return true;
    }
    return false;
}

/// Orders masks by their sorted index lists, compared lexicographically
/// (a proper prefix sorts first).
inline bool mask_lex_less(Mask a, Mask b)
{
    if (a == b)
        return false;
    const int k = std::countr_zero(a ^ b);
    if ((a >> k) & 1u)
        return (b >> (k + 1)) != 0;
    return (a >> (k + 1)) == 0;
}

/// 1-based sorted indices of the set bits.
inline std::vector<int> mask_to_indices(Mask m)
{
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u)
            out.push_back(i + 1);
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& indices)
{
    Mask m = 0;
    for (int i : indices)
        m |= Mask{1} << (i - 1);
    return m;
}

}  // namespace kostka
