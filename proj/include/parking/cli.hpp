#pragma once

// Command-line front end. Kept header-only so tests can drive it in-process;
// tools/parking_cli.cpp is a thin main() around run().

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "core.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "types.hpp"

namespace parking::cli {

enum exit_code : int { ok = 0, failure = 1, usage = 2 };

/// Bad flag values. Always maps to exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using record = nlohmann::ordered_json;

enum class output_format { text, jsonl, csv };

struct range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    [[nodiscard]] std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

// ---------------------------------------------------------------------------
// Parsing

template <typename Int>
Int parse_integer(std::string_view text, std::string_view what)
{
    Int value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || text.front() == '+' || text.front() == '-')
        throw usage_error(std::string(what) + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

/// "lo..hi" (inclusive) or a single integer k meaning k..k.
inline range parse_range(std::string_view text, std::string_view what)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto k = parse_integer<std::uint32_t>(text, what);
        return {k, k};
    }
    range r{parse_integer<std::uint32_t>(text.substr(0, dots), what),
            parse_integer<std::uint32_t>(text.substr(dots + 2), what)};
    if (r.lo > r.hi) throw usage_error(std::string(what) + ": empty range '" + std::string(text) + "'");
    return r;
}

inline std::vector<std::uint64_t> parse_list(std::string_view text, std::string_view what)
{
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto v = parse_integer<std::uint64_t>(token, what);
        if (v == 0) throw usage_error(std::string(what) + ": entries must be positive");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline word parse_word(std::string_view text, std::string_view what) { return word(parse_list(text, what)); }

inline position_set parse_positions(std::string_view text, std::string_view what)
{
    try {
        return position_set(parse_list(text, what));
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string(what) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Formatting

template <typename Range>
std::string join(const Range& values)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os.str();
}

inline std::string to_decimal(const big_int& v) { return v.str(); }

inline record make_record(std::string_view kind, const params& p)
{
    record r;
    r["kind"] = kind;
    r["n"] = p.n;
    r["a"] = p.a;
    r["b"] = p.b;
    return r;
}

inline record& put_word(record& r, std::string_view key, const word& w)
{
    r[std::string(key)] = join(w);
    r[std::string(key) + "_length"] = w.size();
    return r;
}

inline record& put_positions(record& r, std::string_view key, const position_set& s)
{
    r[std::string(key)] = join(s);
    r[std::string(key) + "_size"] = s.size();
    return r;
}

class record_writer {
public:
    record_writer(std::ostream& out, output_format format) : out_(out), format_(format) {}

    void write(const record& r)
    {
        if (format_ == output_format::jsonl) {
            out_ << r.dump() << '\n';
            return;
        }
        // text: "<kind> key=value ..."
        bool first = true;
        for (const auto& [key, value] : r.items()) {
            if (first) {
                out_ << value.get<std::string>();
                first = false;
                continue;
            }
            out_ << ' ' << key << '=';
            if (value.is_string())
                out_ << value.get<std::string>();
            else
                out_ << value.dump();
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    output_format format_;
};

// ---------------------------------------------------------------------------
// Subcommands

struct common_flags {
    std::string n, a, b;
    std::string format;
};

inline params single_params(const common_flags& f)
{
    return {parse_integer<std::uint32_t>(f.n, "-n"), parse_integer<std::uint32_t>(f.a, "-a"),
            parse_integer<std::uint32_t>(f.b, "-b")};
}

inline output_format parse_format(const std::string& text, bool allow_csv, output_format fallback)
{
    if (text.empty()) return fallback;
    if (text == "text") return output_format::text;
    if (text == "jsonl") return output_format::jsonl;
    if (text == "csv") {
        if (!allow_csv) throw usage_error("--format csv is only supported by 'table'");
        return output_format::csv;
    }
    throw usage_error("--format: expected text, jsonl or csv");
}

inline int cmd_count(const common_flags& f, const std::string& method, std::ostream& out, std::ostream& err)
{
    const params p = single_params(f);
    record_writer writer(out, parse_format(f.format, false, output_format::text));

    std::vector<std::string> methods;
    if (method == "all")
        methods = {"formula", "recurrence", "brute"};
    else if (method == "formula" || method == "recurrence" || method == "brute" || method == "profiles")
        methods = {method};
    else
        throw usage_error("--method: expected formula, recurrence, brute, profiles or all");

    std::vector<count_t> values;
    for (const std::string& m : methods) {
        count_t v;
        if (m == "formula")
            v = count_formula(p);
        else if (m == "recurrence")
            v = count_recurrence(p);
        else if (m == "brute")
            v = count_brute(p, brute_method::box);
        else
            v = count_brute(p, brute_method::profiles);
        record r = make_record("count", p);
        r["method"] = m;
        r["count"] = to_decimal(v);
        writer.write(r);
        values.push_back(std::move(v));
    }
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
        err << "error: counting methods disagree\n";
        return failure;
    }
    return ok;
}

inline int cmd_enumerate(const common_flags& f, const std::optional<std::uint64_t>& limit, std::ostream& out)
{
    const params p = single_params(f);
    record_writer writer(out, parse_format(f.format, false, output_format::text));
    std::uint64_t total = 0;
    parking_words words(p);
    while ((!limit || total < *limit) && words.advance()) {
        record r = make_record("word", p);
        put_word(r, "word", words.value());
        writer.write(r);
        ++total;
    }
    record summary = make_record("summary", p);
    summary["total"] = total;
    writer.write(summary);
    return ok;
}

inline int cmd_check(const common_flags& f, const std::string& word_text, std::ostream& out)
{
    const params p = single_params(f);
    record_writer writer(out, parse_format(f.format, false, output_format::text));
    const word x = parse_word(word_text, "--word");
    if (x.size() != p.n)
        throw usage_error("--word has " + std::to_string(x.size()) + " entries, expected n = " + std::to_string(p.n));
    const bool verdict = is_parking(x, p);
    record r = make_record("check", p);
    put_word(r, "word", x);
    r["verdict"] = verdict;
    writer.write(r);
    return verdict ? ok : failure;
}

struct bijection_flags {
    std::optional<std::string> word;
    std::optional<std::string> positions;
    std::optional<std::string> reduced;
    bool roundtrip = false;
};

inline int cmd_bijection(const common_flags& f, const bijection_flags& bf, std::ostream& out, std::ostream& err)
{
    const params p = single_params(f);
    record_writer writer(out, parse_format(f.format, false, output_format::text));

    const bool decoding = bf.positions || bf.reduced;
    if (decoding && bf.word) throw usage_error("give either --word or --positions/--reduced, not both");
    if (!decoding && !bf.word) throw usage_error("--word or --positions/--reduced is required");
    if (decoding && bf.roundtrip) throw usage_error("--roundtrip takes --word");

    try {
        if (decoding) {
            const bijection_parts parts{parse_positions(bf.positions.value_or(""), "--positions"),
                                        parse_word(bf.reduced.value_or(""), "--reduced")};
            const word x = bijection_decode(parts, p);
            record r = make_record("bijection", p);
            r["direction"] = "decode";
            put_positions(r, "positions", parts.ones_positions);
            put_word(r, "reduced", parts.reduced);
            put_word(r, "word", x);
            writer.write(r);
            return ok;
        }

        const word x = parse_word(*bf.word, "--word");
        if (x.size() != p.n)
            throw usage_error("--word has " + std::to_string(x.size()) + " entries, expected n = " + std::to_string(p.n));
        const bijection_parts parts = bijection_encode(x, p);
        const auto r_ones = static_cast<std::int64_t>(parts.ones_positions.size());

        record r = make_record("bijection", p);
        r["direction"] = bf.roundtrip ? "roundtrip" : "encode";
        put_word(r, "word", x);
        put_positions(r, "positions", parts.ones_positions);
        put_word(r, "reduced", parts.reduced);
        // Signed: the first threshold is -1 for the empty word at a = 0.
        r["reduced_n"] = std::int64_t{p.n} - r_ones;
        r["reduced_a"] = std::int64_t{p.a} + std::int64_t{p.b} * r_ones - 1;
        r["reduced_b"] = p.b;
        if (!bf.roundtrip) {
            writer.write(r);
            return ok;
        }
        const word back = bijection_decode(parts, p);
        put_word(r, "decoded", back);
        r["identity"] = back == x;
        writer.write(r);
        if (back != x) {
            err << "error: roundtrip did not reproduce the input word\n";
            return failure;
        }
        return ok;
    } catch (const std::domain_error& e) {
        record r = make_record("error", p);
        r["message"] = e.what();
        writer.write(r);
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

struct sweep_flags {
    std::string what = "identity";
    bool quiet = false;
};

template <typename Fn>
void sweep(const range& ns, const range& as, const range& bs, Fn&& fn)
{
    for (std::uint64_t n = ns.lo; n <= ns.hi; ++n)
        for (std::uint64_t a = as.lo; a <= as.hi; ++a)
            for (std::uint64_t b = bs.lo; b <= bs.hi; ++b)
                fn(params{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
}

inline int cmd_verify(const common_flags& f, const sweep_flags& sf, std::ostream& out)
{
    const range ns = parse_range(f.n, "-n"), as = parse_range(f.a, "-a"), bs = parse_range(f.b, "-b");
    record_writer writer(out, parse_format(f.format, false, output_format::text));

    if (sf.what != "identity" && sf.what != "footnote" && sf.what != "theorem")
        throw usage_error("--what: expected identity, footnote or theorem");
    if (sf.what != "theorem" && ns.lo == 0) throw usage_error("-n: the identity needs n >= 1");

    std::uint64_t points = 0, failures = 0;
    auto emit = [&](const record& r, bool passed) {
        if (!passed) ++failures;
        if (!sf.quiet || !passed) writer.write(r);
    };

    // One memo table per increment b, shared across the sweep.
    std::map<std::uint32_t, recurrence_table> tables;

    sweep(ns, as, bs, [&](const params& p) {
        ++points;
        if (sf.what == "identity") {
            const identity_report rep = verify_identity(p);
            record r = make_record("identity", p);
            r["lhs"] = to_decimal(rep.lhs);
            r["rhs"] = to_decimal(rep.rhs);
            r["terms"] = join(rep.terms);
            r["verdict"] = rep.verdict;
            emit(r, rep.verdict);
        } else if (sf.what == "footnote") {
            const footnote_report rep = verify_footnote_steps(p);
            bool all = true;
            std::vector<record> steps;
            for (const footnote_step& s : rep.steps) {
                record r = make_record("footnote-step", p);
                r["step"] = s.index;
                r["claim"] = s.description;
                r["M"] = to_decimal(rep.top);
                r["lhs"] = join(s.lhs);
                r["rhs"] = join(s.rhs);
                r["holds"] = s.holds;
                all = all && s.holds;
                steps.push_back(std::move(r));
            }
            if (!all) ++failures;
            if (!sf.quiet || !all)
                for (const record& r : steps) writer.write(r);
        } else {
            auto [it, inserted] = tables.try_emplace(p.b, p.b);
            const count_t rec = it->second.value(p.n, p.a);
            const count_t closed = count_formula(p);
            record r = make_record("theorem", p);
            r["recurrence"] = to_decimal(rec);
            r["formula"] = to_decimal(closed);
            r["verdict"] = rec == closed;
            emit(r, rec == closed);
        }
    });

    record summary;
    summary["kind"] = "summary";
    summary["n"] = ns.str();
    summary["a"] = as.str();
    summary["b"] = bs.str();
    summary["what"] = sf.what;
    summary["points"] = points;
    summary["failures"] = failures;
    writer.write(summary);
    return failures == 0 ? ok : failure;
}

inline int cmd_table(const common_flags& f, std::ostream& out)
{
    const range ns = parse_range(f.n, "-n"), as = parse_range(f.a, "-a"), bs = parse_range(f.b, "-b");
    const output_format format = parse_format(f.format, true, output_format::csv);
    if (format == output_format::csv) {
        out << "n,a,b,count\n";
        sweep(ns, as, bs, [&](const params& p) {
            out << p.n << ',' << p.a << ',' << p.b << ',' << to_decimal(count_formula(p)) << '\n';
        });
        return ok;
    }
    record_writer writer(out, format);
    sweep(ns, as, bs, [&](const params& p) {
        record r = make_record("table-row", p);
        r["count"] = to_decimal(count_formula(p));
        writer.write(r);
    });
    return ok;
}

struct sample_flags {
    std::uint64_t seed = 0;
    std::uint64_t draws = 1;
    std::uint64_t budget = default_sample_budget;
};

inline int cmd_sample(const common_flags& f, const sample_flags& sf, std::ostream& out, std::ostream& err)
{
    const params p = single_params(f);
    record_writer writer(out, parse_format(f.format, false, output_format::text));
    try {
        for (std::uint64_t i = 0; i < sf.draws; ++i) {
            const std::uint64_t seed = sf.seed + i;
            const word x = sample_uniform(p, seed, sf.budget);
            record r = make_record("sample", p);
            r["seed"] = seed;
            put_word(r, "word", x);
            writer.write(r);
        }
    } catch (const std::exception& e) {
        // domain_error (empty set) or resource_error (budget)
        record r = make_record("error", p);
        r["message"] = e.what();
        writer.write(r);
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return ok;
}

// ---------------------------------------------------------------------------

/// Runs the tool on @p args (without the program name). Data records go to
/// @p out, diagnostics to @p err. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Count, enumerate, check and cross-verify (a,b)-parking functions", "parking"};
    app.require_subcommand(1);

    common_flags f;
    auto add_common = [&f](CLI::App* sub, bool ranges) {
        const char* kind = ranges ? "range lo..hi or integer" : "non-negative integer";
        sub->add_option("-n", f.n, std::string("length (") + kind + ")")->required();
        sub->add_option("-a", f.a, std::string("first threshold (") + kind + ")")->required();
        sub->add_option("-b", f.b, std::string("threshold increment (") + kind + ")")->required();
        sub->add_option("--format", f.format, "text, jsonl or csv");
    };

    std::string method = "formula";
    auto* count = app.add_subcommand("count", "count P(n,a,b)");
    add_common(count, false);
    count->add_option("--method", method, "formula, recurrence, brute, profiles or all");

    std::optional<std::uint64_t> limit;
    auto* enumerate = app.add_subcommand("enumerate", "list P(n,a,b) in lexicographic order");
    add_common(enumerate, false);
    enumerate->add_option("--limit", limit, "stop after this many words");

    std::string word_text;
    auto* check = app.add_subcommand("check", "test one word for membership");
    add_common(check, false);
    check->add_option("--word", word_text, "comma-separated positive integers")->required();

    bijection_flags bf;
    auto* bijection = app.add_subcommand("bijection", "map x -> (S, y) or back");
    add_common(bijection, false);
    bijection->add_option("--word", bf.word, "word to encode");
    bijection->add_option("--positions", bf.positions, "positions of the 1s (decode)");
    bijection->add_option("--reduced", bf.reduced, "reduced word y (decode)");
    bijection->add_flag("--roundtrip", bf.roundtrip, "encode, decode and compare");

    sweep_flags sf;
    auto* verify = app.add_subcommand("verify", "sweep a grid checking the identity, its derivation, or the theorem");
    add_common(verify, true);
    verify->add_option("--what", sf.what, "identity, footnote or theorem");
    verify->add_flag("--quiet", sf.quiet, "print failures and the summary only");

    auto* table = app.add_subcommand("table", "closed-form counts over a grid");
    add_common(table, true);

    sample_flags smp;
    auto* sample = app.add_subcommand("sample", "uniform random members by rejection");
    add_common(sample, false);
    sample->add_option("--seed", smp.seed, "seed for mt19937_64 (first draw)");
    sample->add_option("--draws", smp.draws, "number of draws, seeds seed, seed+1, ...");
    sample->add_option("--budget", smp.budget, "maximum box draws per sample");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*count) return cmd_count(f, method, out, err);
        if (*enumerate) return cmd_enumerate(f, limit, out);
        if (*check) return cmd_check(f, word_text, out);
        if (*bijection) return cmd_bijection(f, bf, out, err);
        if (*verify) return cmd_verify(f, sf, out);
        if (*table) return cmd_table(f, out);
        if (*sample) return cmd_sample(f, smp, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace parking::cli
