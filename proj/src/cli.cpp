#include "necklace/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "necklace/verify.hpp"

namespace necklace::cli {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed_form";
        case Method::CycleIndex: return "cycle_index";
        case Method::BruteForce: return "brute_force";
    }
    return "unknown";
}

std::string_view to_string(DihedralMode m) {
    return m == DihedralMode::Corrected ? "corrected" : "paper_literal";
}

std::vector<std::uint64_t> parse_counts(std::string_view text) {
    std::vector<std::uint64_t> counts;
    bool any_positive = false;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);

        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("invalid color count '" + std::string(field) +
                                        "' (expected nonnegative integers separated by commas)");
        counts.push_back(v);
        any_positive = any_positive || v > 0;
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (!any_positive) throw std::invalid_argument("at least one color count must be positive");
    return counts;
}

CountReport compute_report(const std::vector<std::uint64_t>& counts, SymmetryGroup group,
                           DihedralMode mode, Method method, const Limits& limits) {
    const ColorMultiplicities n(counts);
    CountReport r;
    r.counts = counts;
    r.total = n.total();
    r.group = group;
    r.mode = group == SymmetryGroup::Dihedral ? mode : DihedralMode::Corrected;
    r.method = method;
    if (group == SymmetryGroup::Dihedral) r.dihedral_case = classify_dihedral_case(n);
    if (r.mode == DihedralMode::PaperLiteral && method != Method::ClosedForm)
        throw std::invalid_argument("paper-literal mode applies only to the closed form");

    switch (method) {
        case Method::ClosedForm:
            r.value = group == SymmetryGroup::Cyclic ? Fraction(count_cyclic(n))
                                                     : count_dihedral(n, r.mode);
            break;
        case Method::CycleIndex: {
            const auto p = group == SymmetryGroup::Cyclic
                               ? cycle_index_cyclic(n.total(), counts.size(), limits.terms)
                               : cycle_index_dihedral(n.total(), counts.size(), limits.terms);
            r.value = Fraction(extract_count(p, n));
            break;
        }
        case Method::BruteForce:
            r.value = Fraction(count_orbits(n, group, limits.words));
            break;
    }
    return r;
}

namespace {

std::string join_counts(const std::vector<std::uint64_t>& counts, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(counts[i]);
    }
    return s;
}

std::string case_name(const CountReport& r) {
    return r.dihedral_case ? std::string(to_string(*r.dihedral_case)) : std::string();
}

}  // namespace

nlohmann::json to_json(const CountReport& r) {
    nlohmann::json j;
    j["counts"] = r.counts;
    j["N"] = r.total;
    j["group"] = std::string(to_string(r.group));
    j["mode"] = std::string(to_string(r.mode));
    j["case"] = r.dihedral_case ? nlohmann::json(case_name(r)) : nlohmann::json(nullptr);
    j["method"] = std::string(to_string(r.method));
    j["value"] = r.value_string();
    j["diagnostic"] = r.diagnostic();
    return j;
}

std::string to_csv_row(const CountReport& r) {
    std::ostringstream out;
    out << '"' << join_counts(r.counts) << "\"," << r.total << ',' << to_string(r.group) << ','
        << to_string(r.mode) << ',' << case_name(r) << ',' << to_string(r.method) << ','
        << r.value_string();
    return out.str();
}

std::string to_text(const CountReport& r) {
    std::ostringstream out;
    out << "counts=" << join_counts(r.counts) << " N=" << r.total << " group=" << to_string(r.group)
        << " mode=" << to_string(r.mode);
    if (r.dihedral_case) out << " case=" << case_name(r);
    out << " method=" << to_string(r.method) << " value=" << r.value_string();
    if (r.diagnostic()) out << " diagnostic=true";
    return out.str();
}

namespace {

enum class Format { Text, Json, Csv };

struct GlobalOptions {
    std::string group = "cyclic";
    std::string mode = "corrected";
    std::string format = "text";
    std::string method = "closed-form";
    std::uint64_t limit_terms = ExpansionLimits{}.max_terms;
    std::uint64_t limit_words = EnumerationLimits{}.max_words;

    Limits limits() const {
        return Limits{.terms = {.max_terms = limit_terms}, .words = {.max_words = limit_words}};
    }
};

std::vector<SymmetryGroup> parse_groups(const std::string& g) {
    if (g == "cyclic") return {SymmetryGroup::Cyclic};
    if (g == "dihedral") return {SymmetryGroup::Dihedral};
    return {SymmetryGroup::Cyclic, SymmetryGroup::Dihedral};
}

DihedralMode parse_mode(const std::string& m) {
    return m == "paper-literal" ? DihedralMode::PaperLiteral : DihedralMode::Corrected;
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    return Format::Text;
}

Method parse_method(const std::string& m) {
    if (m == "cycle-index") return Method::CycleIndex;
    if (m == "brute-force") return Method::BruteForce;
    return Method::ClosedForm;
}

void add_group(CLI::App& cmd, GlobalOptions& o, bool allow_both) {
    std::vector<std::string> choices{"cyclic", "dihedral"};
    if (allow_both) choices.push_back("both");
    cmd.add_option("--group", o.group, "Symmetry group")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
}

void add_mode(CLI::App& cmd, GlobalOptions& o) {
    cmd.add_option("--mode", o.mode, "Dihedral one-odd/one-pair formula variant")
        ->check(CLI::IsMember({"corrected", "paper-literal"}))
        ->capture_default_str();
}

void add_format(CLI::App& cmd, GlobalOptions& o, std::vector<std::string> choices) {
    cmd.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(std::move(choices)))
        ->capture_default_str();
}

void add_method(CLI::App& cmd, GlobalOptions& o) {
    cmd.add_option("--method", o.method, "Counting route")
        ->check(CLI::IsMember({"closed-form", "cycle-index", "brute-force"}))
        ->capture_default_str();
}

void add_limits(CLI::App& cmd, GlobalOptions& o) {
    cmd.add_option("--limit-terms", o.limit_terms, "Maximum expanded cycle-index terms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--limit-words", o.limit_words, "Maximum words enumerated per tuple")
        ->envname("NECKLACE_LIMIT_WORDS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int cmd_count(const std::string& counts_text, const GlobalOptions& o, std::ostream& out) {
    const auto counts = parse_counts(counts_text);
    const Format format = parse_format(o.format);
    if (format == Format::Csv) out << kCsvHeader << '\n';
    for (SymmetryGroup g : parse_groups(o.group)) {
        const CountReport r =
            compute_report(counts, g, parse_mode(o.mode), parse_method(o.method), o.limits());
        switch (format) {
            case Format::Text: out << to_text(r) << '\n'; break;
            case Format::Json: out << to_json(r).dump() << '\n'; break;
            case Format::Csv: out << to_csv_row(r) << '\n'; break;
        }
    }
    return kSuccess;
}

int cmd_verify(std::uint64_t max_n, std::size_t colors, const GlobalOptions& o, std::ostream& out) {
    VerifyOptions options;
    for (std::size_t m = 1; m <= colors; ++m) options.ranges.push_back({.colors = m, .max_n = max_n});
    options.groups = parse_groups(o.group);
    options.mode = parse_mode(o.mode);
    options.term_limits = o.limits().terms;
    options.word_limits = o.limits().words;

    const VerifySummary summary = run_verification(options);

    if (parse_format(o.format) == Format::Json) {
        nlohmann::json j;
        j["max_n"] = max_n;
        j["colors"] = colors;
        j["mode"] = std::string(to_string(options.mode));
        for (const auto& [g, tally] : summary.tallies)
            j["groups"][std::string(to_string(g))] = {{"cases", tally.cases},
                                                      {"mismatches", tally.mismatches}};
        for (const auto& [c, hits] : summary.case_hits)
            j["case_hits"][std::string(to_string(c))] = hits;
        j["mismatches"] = nlohmann::json::array();
        for (const Mismatch& mm : summary.mismatches) {
            j["mismatches"].push_back({
                {"counts", mm.counts},
                {"group", std::string(to_string(mm.group))},
                {"case", mm.dihedral_case ? nlohmann::json(std::string(to_string(*mm.dihedral_case)))
                                          : nlohmann::json(nullptr)},
                {"closed_form", mm.closed_form},
                {"cycle_index", mm.cycle_index},
                {"brute_force", mm.brute_force},
            });
        }
        j["ok"] = summary.ok();
        out << j.dump() << '\n';
    } else {
        out << "verify max_n=" << max_n << " colors=" << colors
            << " mode=" << to_string(options.mode) << '\n';
        out << "group      cases  mismatches\n";
        for (const auto& [g, tally] : summary.tallies) {
            std::ostringstream row;
            row << std::left;
            row.width(9);
            row << to_string(g);
            row << std::right;
            row.width(7);
            row << tally.cases;
            row.width(12);
            row << tally.mismatches;
            out << row.str() << '\n';
        }
        for (const auto& [c, hits] : summary.case_hits)
            out << "  " << to_string(c) << ": " << hits << '\n';
        for (const Mismatch& mm : summary.mismatches) {
            out << "MISMATCH counts=" << join_counts(mm.counts) << " group=" << to_string(mm.group);
            if (mm.dihedral_case) out << " case=" << to_string(*mm.dihedral_case);
            out << " closed_form=" << mm.closed_form << " cycle_index=" << mm.cycle_index
                << " brute_force=" << mm.brute_force << '\n';
        }
        out << (summary.ok() ? "OK" : "FAILED") << '\n';
    }
    return summary.ok() ? kSuccess : kMismatch;
}

int cmd_enumerate(const std::string& counts_text, const GlobalOptions& o, std::ostream& out) {
    const auto counts = parse_counts(counts_text);
    const ColorMultiplicities n(counts);
    const SymmetryGroup g = parse_groups(o.group).front();
    const auto reps = representatives(n, g, o.limits().words);

    // Words are numbered over the nonzero colors; restore the input positions.
    const auto labels = n.color_labels();
    std::vector<std::string> lines;
    lines.reserve(reps.size());
    for (const NecklaceWord& w : reps) {
        NecklaceWord relabeled = w;
        for (auto& b : relabeled.beads) b = static_cast<std::uint8_t>(labels[b]);
        lines.push_back(to_string(relabeled, counts.size()));
    }

    if (parse_format(o.format) == Format::Json) {
        nlohmann::json j;
        j["counts"] = counts;
        j["N"] = n.total();
        j["group"] = std::string(to_string(g));
        j["representatives"] = lines;
        j["total"] = std::to_string(lines.size());
        out << j.dump() << '\n';
    } else {
        for (const auto& line : lines) out << line << '\n';
        out << "total=" << lines.size() << '\n';
    }
    return kSuccess;
}

// Non-increasing tuples stand in for every color permutation of themselves.
bool is_partition(const std::vector<std::uint64_t>& c) {
    return std::is_sorted(c.begin(), c.end(), std::greater<>());
}

Count permutation_count(const std::vector<std::uint64_t>& c) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for (auto x : c) ++tally[x];
    std::vector<std::uint64_t> multiplicities;
    for (const auto& [value, k] : tally) multiplicities.push_back(k);
    return multinomial(std::span<const std::uint64_t>(multiplicities));
}

int cmd_sweep(std::uint64_t N, std::size_t m, bool partitions, const GlobalOptions& o,
              std::ostream& out) {
    if (N == 0 || m == 0) throw std::invalid_argument("--n and --m must be positive");
    const Limits limits = o.limits();
    const Count rows = composition_count(N, m);
    if (rows > Count(static_cast<unsigned long>(limits.terms.max_terms)))
        throw ResourceLimitError("sweep would produce " + to_decimal(rows) + " compositions (limit " +
                                 std::to_string(limits.terms.max_terms) + ")");

    const Format format = parse_format(o.format);
    const Method method = parse_method(o.method);
    const DihedralMode mode = parse_mode(o.mode);
    const auto comps = compositions(N, m);

    if (format == Format::Csv) out << kCsvHeader << '\n';
    nlohmann::json all = nlohmann::json::array();
    bool totals_ok = true;

    for (SymmetryGroup g : parse_groups(o.group)) {
        Fraction total = 0;
        nlohmann::json jrows = nlohmann::json::array();
        if (format == Format::Text)
            out << "# group=" << to_string(g) << " N=" << N << " m=" << m << '\n';

        for (const auto& c : comps) {
            if (partitions && !is_partition(c)) continue;
            const CountReport r = compute_report(c, g, mode, method, limits);
            const Count weight = partitions ? permutation_count(c) : Count(1);
            total += r.value * Fraction(weight);

            switch (format) {
                case Format::Text:
                    out << join_counts(c) << '\t' << r.value_string();
                    if (partitions) out << "\tcompositions=" << weight.get_str();
                    if (r.dihedral_case) out << '\t' << to_string(*r.dihedral_case);
                    out << '\n';
                    break;
                case Format::Csv: out << to_csv_row(r) << '\n'; break;
                case Format::Json: {
                    auto jr = to_json(r);
                    if (partitions) jr["compositions"] = weight.get_str();
                    jrows.push_back(std::move(jr));
                    break;
                }
            }
        }

        std::optional<Count> expected;
        if (g == SymmetryGroup::Cyclic) {
            Count sum = 0;
            for (std::uint64_t d : divisors(N)) {
                Count p;
                mpz_ui_pow_ui(p.get_mpz_t(), m, N / d);
                sum += Count(static_cast<unsigned long>(totient(d))) * p;
            }
            expected = sum / Count(static_cast<unsigned long>(N));
            totals_ok = totals_ok && Fraction(*expected) == total;
        }

        const std::string total_str = to_fraction_string(total);
        switch (format) {
            case Format::Text:
                out << "total=" << total_str;
                if (expected) out << " necklace_formula=" << expected->get_str();
                out << '\n';
                break;
            case Format::Csv:
                out << "total," << N << ',' << to_string(g) << ','
                    << to_string(g == SymmetryGroup::Dihedral ? mode : DihedralMode::Corrected)
                    << ",," << to_string(method) << ',' << total_str << '\n';
                break;
            case Format::Json: {
                nlohmann::json j;
                j["N"] = N;
                j["m"] = m;
                j["group"] = std::string(to_string(g));
                j["rows"] = std::move(jrows);
                j["total"] = total_str;
                j["necklace_formula"] =
                    expected ? nlohmann::json(expected->get_str()) : nlohmann::json(nullptr);
                all.push_back(std::move(j));
                break;
            }
        }
    }
    if (format == Format::Json) out << (all.size() == 1 ? all.front() : all).dump() << '\n';
    return totals_ok ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact necklace and bracelet counts for prescribed bead colors", "necklace"};
    app.require_subcommand(1);

    std::string counts;
    GlobalOptions count_opts;
    auto* count = app.add_subcommand("count", "Count necklaces with the given bead counts");
    count->add_option("--counts", counts, "Comma-separated bead counts per color")->required();
    add_group(*count, count_opts, true);
    add_mode(*count, count_opts);
    add_method(*count, count_opts);
    add_format(*count, count_opts, {"text", "json", "csv"});
    add_limits(*count, count_opts);

    std::uint64_t max_n = 8;
    std::size_t colors = 3;
    GlobalOptions verify_opts;
    verify_opts.group = "both";
    auto* verify = app.add_subcommand("verify", "Cross-check closed form, cycle index and brute force");
    verify->add_option("--max-n", max_n, "Largest bead total")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--colors", colors, "Largest number of colors")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_group(*verify, verify_opts, true);
    add_mode(*verify, verify_opts);
    add_format(*verify, verify_opts, {"text", "json"});
    add_limits(*verify, verify_opts);

    GlobalOptions enumerate_opts;
    auto* enumerate = app.add_subcommand("enumerate", "List one canonical word per orbit");
    enumerate->add_option("--counts", counts, "Comma-separated bead counts per color")->required();
    add_group(*enumerate, enumerate_opts, false);
    add_format(*enumerate, enumerate_opts, {"text", "json"});
    add_limits(*enumerate, enumerate_opts);

    std::uint64_t sweep_n = 0;
    std::size_t sweep_m = 0;
    bool partitions = false;
    GlobalOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Count every composition of N into m colors");
    sweep->add_option("--n", sweep_n, "Bead total")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--m", sweep_m, "Number of colors")->required()->check(CLI::PositiveNumber);
    sweep->add_flag("--partitions", partitions, "One row per partition, weighted by its permutations");
    add_group(*sweep, sweep_opts, true);
    add_mode(*sweep, sweep_opts);
    add_method(*sweep, sweep_opts);
    add_format(*sweep, sweep_opts, {"text", "json", "csv"});
    add_limits(*sweep, sweep_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*count) return cmd_count(counts, count_opts, out);
        if (*verify) return cmd_verify(max_n, colors, verify_opts, out);
        if (*enumerate) return cmd_enumerate(counts, enumerate_opts, out);
        if (*sweep) return cmd_sweep(sweep_n, sweep_m, partitions, sweep_opts, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const IntegralityError& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace necklace::cli
