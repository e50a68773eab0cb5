#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "types.hpp"

namespace parking {

/// Single-pass input range over a cursor. Derived supplies
/// `bool advance()` (move to the next element, false when exhausted) and
/// `const value_type& value() const`.
template <typename Derived, typename Value>
class single_pass_range {
public:
    using value_type = Value;

    class iterator {
    public:
        using value_type = Value;
        using difference_type = std::ptrdiff_t;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(Derived* self) : self_(self) {}

        const Value& operator*() const { return self_->value(); }
        const Value* operator->() const { return &self_->value(); }
        iterator& operator++()
        {
            if (!self_->advance()) self_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.self_ == nullptr; }

    private:
        Derived* self_ = nullptr;
    };

    iterator begin()
    {
        auto& self = static_cast<Derived&>(*this);
        return self.advance() ? iterator(&self) : iterator();
    }
    std::default_sentinel_t end() const noexcept { return {}; }

    /// Pull-style access: the next element, or nullopt once exhausted.
    std::optional<Value> next()
    {
        auto& self = static_cast<Derived&>(*this);
        if (!self.advance()) return std::nullopt;
        return self.value();
    }

    /// Consumes the rest of the stream.
    std::vector<Value> collect()
    {
        std::vector<Value> out;
        for (const Value& v : *this) out.push_back(v);
        return out;
    }
};

/// Every member of P(n, a, b) once, in lexicographic order, found by
/// filtering the box {1..M}^n with M = a + b(n-1) through is_parking.
class parking_words : public single_pass_range<parking_words, word> {
public:
    explicit parking_words(const params& p) : p_(p), bound_(p.max_entry()) {}

    bool advance()
    {
        while (step()) {
            current_ = word(digits_);
            if (is_parking(current_, p_)) return true;
        }
        return false;
    }

    [[nodiscard]] const word& value() const noexcept { return current_; }

private:
    // Moves the odometer to the next box point.
    bool step()
    {
        if (state_ == state::done) return false;
        if (state_ == state::fresh) {
            state_ = state::running;
            if (p_.n > 0 && bound_ == 0) {
                state_ = state::done;
                return false;
            }
            digits_.assign(p_.n, 1);
            return true;
        }
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (digits_[i] < bound_) {
                ++digits_[i];
                std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits_.end(), entry_t{1});
                return true;
            }
        }
        state_ = state::done;
        return false;
    }

    enum class state { fresh, running, done };

    params p_;
    entry_t bound_;
    state state_ = state::fresh;
    std::vector<entry_t> digits_;
    word current_;
};

/// Non-decreasing (t_1..t_n) with 1 <= t_i <= a + b(i-1), in lexicographic
/// order: exactly the sorted profiles of P(n, a, b).
class parking_profiles : public single_pass_range<parking_profiles, sorted_profile> {
public:
    explicit parking_profiles(const params& p) : p_(p) {}

    bool advance()
    {
        if (state_ == state::done) return false;
        if (state_ == state::fresh) {
            state_ = state::running;
            if (p_.n > 0 && p_.a == 0) {
                state_ = state::done;
                return false;
            }
            digits_.assign(p_.n, 1);
        } else {
            std::size_t i = digits_.size();
            while (i > 0 && digits_[i - 1] >= p_.threshold(i)) --i;
            if (i == 0) {
                state_ = state::done;
                return false;
            }
            const entry_t bumped = ++digits_[i - 1];
            std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i), digits_.end(), bumped);
        }
        current_ = sorted_profile(digits_);
        return true;
    }

    [[nodiscard]] const sorted_profile& value() const noexcept { return current_; }

private:
    enum class state { fresh, running, done };

    params p_;
    state state_ = state::fresh;
    std::vector<entry_t> digits_;
    sorted_profile current_;
};

/// Distinct rearrangements of a profile, in lexicographic order.
class multiset_permutations : public single_pass_range<multiset_permutations, word> {
public:
    explicit multiset_permutations(const sorted_profile& profile)
        : digits_(profile.begin(), profile.end())
    {
    }

    bool advance()
    {
        if (started_) {
            if (!std::next_permutation(digits_.begin(), digits_.end())) return false;
        }
        started_ = true;
        current_ = word(digits_);
        return true;
    }

    [[nodiscard]] const word& value() const noexcept { return current_; }

private:
    std::vector<entry_t> digits_;
    bool started_ = false;
    word current_;
};

/// n! / prod(m_v!) over the multiplicities m_v of the profile's values.
[[nodiscard]] inline count_t multinomial(const sorted_profile& profile)
{
    auto factorial = [](std::size_t k) {
        count_t f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    count_t result = factorial(profile.size());
    std::size_t run = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        ++run;
        if (i + 1 == profile.size() || profile[i + 1] != profile[i]) {
            result /= factorial(run);
            run = 0;
        }
    }
    return result;
}

enum class brute_method { box, profiles };

/// |P(n, a, b)| by exhaustion: either filtering the whole box, or summing
/// multinomials over sorted profiles.
[[nodiscard]] inline count_t count_brute(const params& p, brute_method method)
{
    count_t total = 0;
    if (method == brute_method::box) {
        parking_words words(p);
        while (words.advance()) ++total;
    } else {
        parking_profiles profiles(p);
        while (profiles.advance()) total += multinomial(profiles.value());
    }
    return total;
}

namespace detail {

/// Uniform integer in [1, bound] from a 64-bit engine by rejection, so the
/// result depends only on the engine's output sequence.
inline entry_t uniform_entry(std::mt19937_64& engine, entry_t bound)
{
    constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t last_accepted = top - (top % bound + 1) % bound;
    std::uint64_t v = engine();
    while (v > last_accepted) v = engine();
    return 1 + v % bound;
}

} // namespace detail

inline constexpr std::uint64_t default_sample_budget = 1'000'000;

/// Uniform member of P(n, a, b): draws from the box {1..M}^n with
/// std::mt19937_64 seeded by @p seed until is_parking accepts.
/// Each coordinate is drawn left to right via detail::uniform_entry.
[[nodiscard]] inline word sample_uniform(const params& p, std::uint64_t seed,
                                         std::uint64_t max_attempts = default_sample_budget)
{
    if (p.n == 0) return word{};
    if (p.a == 0) throw std::domain_error("P(n, 0, b) is empty for n >= 1");

    std::mt19937_64 engine(seed);
    const entry_t bound = p.max_entry();
    std::vector<entry_t> draw(p.n);
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (entry_t& e : draw) e = detail::uniform_entry(engine, bound);
        word candidate(draw);
        if (is_parking(candidate, p)) return candidate;
    }
    throw resource_error("sampler exhausted its budget of " + std::to_string(max_attempts) + " attempts");
}

} // namespace parking
