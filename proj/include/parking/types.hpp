#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parking {

/// Exact arbitrary-precision integer. Counts are never negative; the signed
/// type is shared with the identity checker, whose intermediate terms can be.
using big_int = boost::multiprecision::cpp_int;
using count_t = big_int;

using entry_t = std::uint64_t;

/// Raised when a value does not fit the instance it is evaluated against
/// (e.g. a word whose length differs from n).
class instance_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a caller-supplied budget runs out.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Domain errors (a value outside the set an operation is defined on) use
// std::domain_error.

/// Problem instance (n, a, b): words of length n whose sorted profile stays
/// under the thresholds a, a+b, a+2b, ...
struct params {
    std::uint32_t n = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    /// a + b(i-1) for 1-based position i.
    [[nodiscard]] constexpr entry_t threshold(std::uint64_t i) const noexcept
    {
        return entry_t{a} + entry_t{b} * (i - 1);
    }

    /// Largest threshold, a + b(n-1); 0 when n == 0.
    [[nodiscard]] constexpr entry_t max_entry() const noexcept
    {
        return n == 0 ? 0 : threshold(n);
    }

    friend constexpr bool operator==(const params&, const params&) = default;
};

/// A finite sequence of positive integers.
class word {
public:
    word() = default;

    explicit word(std::vector<entry_t> entries) : entries_(std::move(entries))
    {
        for (entry_t e : entries_) {
            if (e < 1) throw std::invalid_argument("word entries must be positive");
        }
    }

    word(std::initializer_list<entry_t> entries) : word(std::vector<entry_t>(entries)) {}

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] entry_t operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const entry_t> entries() const noexcept { return entries_; }
    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const word&, const word&) = default;
    friend auto operator<=>(const word&, const word&) = default;

private:
    std::vector<entry_t> entries_;
};

/// Non-decreasing sequence of positive integers.
class sorted_profile {
public:
    sorted_profile() = default;

    explicit sorted_profile(std::vector<entry_t> entries) : entries_(std::move(entries))
    {
        if (!std::is_sorted(entries_.begin(), entries_.end()))
            throw std::invalid_argument("profile must be non-decreasing");
        if (!entries_.empty() && entries_.front() < 1)
            throw std::invalid_argument("profile entries must be positive");
    }

    sorted_profile(std::initializer_list<entry_t> entries)
        : sorted_profile(std::vector<entry_t>(entries))
    {
    }

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] entry_t operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const entry_t> entries() const noexcept { return entries_; }
    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const sorted_profile&, const sorted_profile&) = default;
    friend auto operator<=>(const sorted_profile&, const sorted_profile&) = default;

private:
    std::vector<entry_t> entries_;
};

/// Strictly increasing 1-based positions. The upper bound n is checked by
/// the operation that knows n.
class position_set {
public:
    position_set() = default;

    explicit position_set(std::vector<std::uint64_t> positions) : positions_(std::move(positions))
    {
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (positions_[i] < 1) throw std::invalid_argument("positions are 1-based");
            if (i > 0 && positions_[i - 1] >= positions_[i])
                throw std::invalid_argument("positions must be strictly increasing");
        }
    }

    position_set(std::initializer_list<std::uint64_t> positions)
        : position_set(std::vector<std::uint64_t>(positions))
    {
    }

    [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
    [[nodiscard]] bool empty() const noexcept { return positions_.empty(); }
    [[nodiscard]] std::uint64_t operator[](std::size_t i) const { return positions_[i]; }
    [[nodiscard]] std::span<const std::uint64_t> positions() const noexcept { return positions_; }
    [[nodiscard]] auto begin() const noexcept { return positions_.begin(); }
    [[nodiscard]] auto end() const noexcept { return positions_.end(); }

    friend bool operator==(const position_set&, const position_set&) = default;

private:
    std::vector<std::uint64_t> positions_;
};

/// The pair (S, y): where the 1s sat, and the shifted remainder.
struct bijection_parts {
    position_set ones_positions;
    word reduced;

    friend bool operator==(const bijection_parts&, const bijection_parts&) = default;
};

} // namespace parking
