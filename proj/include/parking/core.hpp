#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace parking {

[[nodiscard]] inline sorted_profile make_sorted_profile(const word& x)
{
    std::vector<entry_t> entries(x.begin(), x.end());
    std::sort(entries.begin(), entries.end());
    return sorted_profile(std::move(entries));
}

/// True iff the sorted profile of @p x satisfies x'_i <= a + b(i-1) for all i.
/// The empty word is a parking function for every (a, b).
[[nodiscard]] inline bool is_parking(const word& x, const params& p)
{
    if (x.size() != p.n)
        throw instance_error("word has length " + std::to_string(x.size()) + ", expected n = "
                             + std::to_string(p.n));
    const sorted_profile sorted = make_sorted_profile(x);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > p.threshold(i + 1)) return false;
    }
    return true;
}

/// Parameters of the smaller instance a word with r ones reduces to:
/// (n - r, a + b r - 1, b). Throws when a + b r = 0, which for a parking
/// function only happens at n = a = 0.
[[nodiscard]] inline params reduced_params(const params& p, std::uint32_t r)
{
    if (r > p.n) throw std::domain_error("more ones than entries");
    const std::uint64_t shifted = std::uint64_t{p.a} + std::uint64_t{p.b} * r;
    if (shifted == 0) throw std::domain_error("reduced first threshold a + b r - 1 is negative");
    if (shifted - 1 > std::numeric_limits<std::uint32_t>::max())
        throw std::domain_error("reduced first threshold overflows");
    return params{p.n - r, static_cast<std::uint32_t>(shifted - 1), p.b};
}

/// x -> (S, y): S holds the 1-based positions of the 1s, y the other entries
/// in their original order, each decreased by one.
[[nodiscard]] inline bijection_parts bijection_encode(const word& x, const params& p)
{
    if (!is_parking(x, p)) throw std::domain_error("word is not a parking function for these parameters");

    std::vector<std::uint64_t> ones;
    std::vector<entry_t> rest;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1)
            ones.push_back(i + 1);
        else
            rest.push_back(x[i] - 1);
    }
    return bijection_parts{position_set(std::move(ones)), word(std::move(rest))};
}

/// Inverse of bijection_encode. Rejects parts that are not in
/// B_{n,r} x P(n - r, a + b r - 1, b).
[[nodiscard]] inline word bijection_decode(const bijection_parts& parts, const params& p)
{
    const std::size_t r = parts.ones_positions.size();
    if (r > p.n) throw std::domain_error("more positions than entries");
    if (parts.reduced.size() != p.n - r)
        throw std::domain_error("reduced word has length " + std::to_string(parts.reduced.size())
                                + ", expected " + std::to_string(p.n - r));
    for (std::uint64_t pos : parts.ones_positions) {
        if (pos > p.n) throw std::domain_error("position " + std::to_string(pos) + " out of range 1.." + std::to_string(p.n));
    }
    // An empty remainder is vacuously parking, even when a + b r - 1 = -1 (n = a = 0).
    if (!parts.reduced.empty() && !is_parking(parts.reduced, reduced_params(p, static_cast<std::uint32_t>(r))))
        throw std::domain_error("reduced word is not a parking function for (n-r, a+br-1, b)");

    std::vector<entry_t> out(p.n, 0);
    for (std::uint64_t pos : parts.ones_positions) out[pos - 1] = 1;
    std::size_t next = 0;
    for (entry_t& e : out) {
        if (e == 0) e = parts.reduced[next++] + 1;
    }
    return word(std::move(out));
}

} // namespace parking
