#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace parking {

/// Exact C(n, r); zero outside 0 <= r <= n.
[[nodiscard]] inline count_t binomial(std::uint64_t n, std::int64_t r)
{
    if (r < 0 || static_cast<std::uint64_t>(r) > n) return 0;
    std::uint64_t k = static_cast<std::uint64_t>(r);
    if (k > n - k) k = n - k;
    count_t result = 1;
    // After step i the partial product is C(n - k + i, i), so the division is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Closed form a (a + b n)^(n-1); 1 at n = 0.
[[nodiscard]] inline count_t count_formula(const params& p)
{
    if (p.n == 0) return 1;
    if (p.a == 0) return 0;
    const count_t base = count_t(p.a) + count_t(p.b) * p.n;
    return count_t(p.a) * boost::multiprecision::pow(base, p.n - 1);
}

/// Memoized evaluation of
///   p(m, c) = sum_{r=0}^{m} C(m, r) p(m - r, c + b r - 1),
///   p(0, c) = 1,  p(m, 0) = 0 for m >= 1,
/// for one fixed increment b. Not thread-safe; give each thread its own table.
class recurrence_table {
public:
    explicit recurrence_table(std::uint32_t b) : b_(b) {}

    [[nodiscard]] std::uint32_t increment() const noexcept { return b_; }

    /// p(m, c, b). Throws std::logic_error if evaluation revisits an entry
    /// that is still being computed, which a well-founded descent never does.
    count_t value(std::uint32_t m, std::uint64_t c)
    {
        if (m == 0) return 1;
        if (c == 0) return 0;

        const key k{m, c};
        if (auto it = memo_.find(k); it != memo_.end()) {
            if (!it->second.done)
                throw std::logic_error("recurrence revisited (" + std::to_string(m) + ", "
                                       + std::to_string(c) + ") while computing it");
            return it->second.value;
        }

        memo_[k] = slot{};
        const std::vector<count_t>& row = pascal_row(m);
        count_t sum = 0;
        for (std::uint32_t r = 0; r <= m; ++r) {
            sum += row[r] * value(m - r, c + std::uint64_t{b_} * r - 1);
        }
        // std::map references survive insertion, but look up again for clarity.
        slot& s = memo_.at(k);
        s.value = sum;
        s.done = true;
        return sum;
    }

    /// Number of memoized (m, c) entries with m >= 1 and c >= 1.
    [[nodiscard]] std::size_t size() const noexcept { return memo_.size(); }

    /// Every completed entry as ((m, c), p(m, c, b)).
    [[nodiscard]] std::vector<std::pair<std::pair<std::uint32_t, std::uint64_t>, count_t>> entries() const
    {
        std::vector<std::pair<std::pair<std::uint32_t, std::uint64_t>, count_t>> out;
        out.reserve(memo_.size());
        for (const auto& [k, s] : memo_) {
            if (s.done) out.push_back({k, s.value});
        }
        return out;
    }

private:
    using key = std::pair<std::uint32_t, std::uint64_t>;
    struct slot {
        count_t value;
        bool done = false;
    };

    const std::vector<count_t>& pascal_row(std::uint32_t m)
    {
        if (pascal_.empty()) pascal_.push_back({1});
        while (pascal_.size() <= m) {
            const std::vector<count_t>& prev = pascal_.back();
            std::vector<count_t> next(prev.size() + 1);
            next.front() = 1;
            next.back() = 1;
            for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = prev[j - 1] + prev[j];
            pascal_.push_back(std::move(next));
        }
        return pascal_[m];
    }

    std::uint32_t b_;
    std::map<key, slot> memo_;
    std::vector<std::vector<count_t>> pascal_;
};

/// p(n, a, b) via the recurrence, with a private memo table.
[[nodiscard]] inline count_t count_recurrence(const params& p)
{
    recurrence_table table(p.b);
    return table.value(p.n, p.a);
}

namespace detail {

/// q(m, c, b) = c (c + b m)^(m-1) over the integers, with q(0, c, b) = 1.
/// c may be -1 (first threshold a = 0 with r = 0), giving a negative term.
inline big_int closed_form_signed(std::uint64_t m, const big_int& c, std::uint32_t b)
{
    if (m == 0) return 1;
    const big_int base = c + big_int(b) * m;
    return c * boost::multiprecision::pow(base, static_cast<unsigned>(m - 1));
}

inline void require_positive_length(const params& p)
{
    if (p.n == 0) throw std::domain_error("identity requires n >= 1");
}

} // namespace detail

struct identity_report {
    params p;
    big_int lhs;
    big_int rhs;
    std::vector<big_int> terms; // indexed by r = 0..n
    bool verdict = false;
};

/// Checks a (a + b n)^(n-1) = sum_r C(n, r) q(n - r, a + b r - 1, b) exactly,
/// where the r = n term is q(0, ., .) = 1.
[[nodiscard]] inline identity_report verify_identity(const params& p)
{
    detail::require_positive_length(p);
    identity_report report{p, 0, 0, {}, false};
    report.lhs = detail::closed_form_signed(p.n, big_int(p.a), p.b);

    std::vector<big_int> row(p.n + 1);
    for (std::uint32_t r = 0; r <= p.n; ++r) row[r] = binomial(p.n, r);

    report.terms.reserve(p.n + 1);
    for (std::uint32_t r = 0; r <= p.n; ++r) {
        const big_int c = big_int(p.a) + big_int(p.b) * r - 1;
        report.terms.push_back(row[r] * detail::closed_form_signed(p.n - r, c, p.b));
        report.rhs += report.terms.back();
    }
    report.verdict = report.lhs == report.rhs;
    return report;
}

struct footnote_step {
    int index = 0;
    std::string description;
    // One entry per r for the per-r steps (1 and 2); a single entry otherwise.
    std::vector<big_int> lhs;
    std::vector<big_int> rhs;
    bool holds = false;
};

struct footnote_report {
    params p;
    big_int top; // M = a + b n - 1
    std::vector<footnote_step> steps;

    [[nodiscard]] bool all_hold() const
    {
        for (const footnote_step& s : steps)
            if (!s.holds) return false;
        return true;
    }
};

/// Replays the derivation of the identity step by step, each step checked
/// exactly with M = a + b n - 1:
///   1. a + b r - 1 = M - b (n - r)                       for r = 0..n
///   2. (n - r) C(n, r) = n C(n - 1, r)                   for r = 0..n-1
///   3. sum_{r=0}^{n} C(n, r) M^(n-r) = (M + 1)^n
///   4. sum_{r=0}^{n-1} C(n-1, r) M^(n-1-r) = (M + 1)^(n-1)
///   5. (M + 1)^n - b n (M + 1)^(n-1) = a (a + b n)^(n-1)
[[nodiscard]] inline footnote_report verify_footnote_steps(const params& p)
{
    using boost::multiprecision::pow;
    detail::require_positive_length(p);

    const std::uint32_t n = p.n;
    const big_int a(p.a);
    const big_int b(p.b);
    const big_int top = a + b * n - 1;

    std::vector<big_int> top_powers(n + 1);
    top_powers[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k) top_powers[k] = top_powers[k - 1] * top;

    std::vector<big_int> row_n(n + 1), row_n1(n);
    for (std::uint32_t r = 0; r <= n; ++r) row_n[r] = binomial(n, r);
    for (std::uint32_t r = 0; r < n; ++r) row_n1[r] = binomial(n - 1, r);

    footnote_report report{p, top, {}};

    auto finish = [](footnote_step step) {
        step.holds = step.lhs == step.rhs;
        return step;
    };

    footnote_step split{1, "a+br-1=M-b(n-r),r=0..n", {}, {}, false};
    for (std::uint32_t r = 0; r <= n; ++r) {
        split.lhs.push_back(a + b * r - 1);
        split.rhs.push_back(top - b * (n - r));
    }
    report.steps.push_back(finish(std::move(split)));

    footnote_step absorb{2, "(n-r)C(n,r)=nC(n-1,r),r=0..n-1", {}, {}, false};
    for (std::uint32_t r = 0; r < n; ++r) {
        absorb.lhs.push_back(big_int(n - r) * row_n[r]);
        absorb.rhs.push_back(big_int(n) * row_n1[r]);
    }
    report.steps.push_back(finish(std::move(absorb)));

    big_int first = 0;
    for (std::uint32_t r = 0; r <= n; ++r) first += row_n[r] * top_powers[n - r];
    const big_int next_power_n = pow(top + 1, n);
    report.steps.push_back(finish({3, "sum_r(C(n,r)M^(n-r))=(M+1)^n", {first}, {next_power_n}, false}));

    big_int second = 0;
    for (std::uint32_t r = 0; r < n; ++r) second += row_n1[r] * top_powers[n - 1 - r];
    const big_int next_power_n1 = pow(top + 1, n - 1);
    report.steps.push_back(finish({4, "sum_r(C(n-1,r)M^(n-1-r))=(M+1)^(n-1)", {second}, {next_power_n1}, false}));

    const big_int assembled = next_power_n - b * n * next_power_n1;
    const big_int closed = a * pow(a + b * n, n - 1);
    report.steps.push_back(finish({5, "(M+1)^n-bn(M+1)^(n-1)=a(a+bn)^(n-1)", {assembled}, {closed}, false}));

    return report;
}

} // namespace parking
