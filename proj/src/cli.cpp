#include "fibcheb/cli.hpp"

#include "fibcheb/chebyshev.hpp"
#include "fibcheb/combinatorial.hpp"
#include "fibcheb/identities.hpp"
#include "fibcheb/sequences.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace fibcheb::cli {

namespace {

long long parse_ll(std::string_view text, const std::string& what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("expected an integer for " + what + ", got '" + std::string(text) + "'");
    return v;
}

// lo..hi (inclusive) or a single value.
RangeOverride parse_set(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw UsageError("--set expects name=lo..hi, got '" + std::string(text) + "'");
    RangeOverride o;
    o.name = std::string(text.substr(0, eq));
    if (!Pt::valid_name(o.name)) throw UsageError("unknown parameter name: " + o.name);
    std::string_view range = text.substr(eq + 1);
    auto dots = range.find("..");
    if (dots == std::string_view::npos) {
        o.lo = o.hi = parse_ll(range, "--set " + o.name);
    } else {
        o.lo = parse_ll(range.substr(0, dots), "--set " + o.name);
        o.hi = parse_ll(range.substr(dots + 2), "--set " + o.name);
    }
    return o;
}

// Flag map for one subcommand; repeatable flags collect into vectors.
struct Args {
    std::map<std::string, std::string> single;
    std::vector<std::string> sets;

    static Args parse(const std::vector<std::string>& argv, std::size_t from,
                      const std::vector<std::string>& allowed) {
        Args a;
        for (std::size_t i = from; i < argv.size(); ++i) {
            const std::string& flag = argv[i];
            bool known = false;
            for (const auto& name : allowed)
                if (flag == name) known = true;
            if (!known) throw UsageError("unknown flag: " + flag);
            if (i + 1 >= argv.size()) throw UsageError(flag + " expects a value");
            const std::string& value = argv[++i];
            if (flag == "--set") {
                a.sets.push_back(value);
            } else if (!a.single.emplace(flag, value).second) {
                throw UsageError("duplicate flag: " + flag);
            }
        }
        return a;
    }

    std::optional<std::string> get(const std::string& flag) const {
        auto it = single.find(flag);
        if (it == single.end()) return std::nullopt;
        return it->second;
    }
};

// Writes identical bytes to the report stream and, when set, to --out.
struct Sink {
    std::ostream& out;
    std::ofstream file;
    bool has_file = false;

    explicit Sink(std::ostream& o, const std::optional<std::string>& path) : out(o) {
        if (path) {
            file.open(*path, std::ios::binary | std::ios::trunc);
            if (!file) throw UsageError("cannot open output file: " + *path);
            has_file = true;
        }
    }
    void line(std::string_view s) {
        out << s << '\n';
        if (has_file) {
            file.write(s.data(), static_cast<std::streamsize>(s.size()));
            file.put('\n');
        }
    }
};

int parse_jobs(const Args& args) {
    long long jobs = 1;
    if (auto j = args.get("--jobs")) jobs = parse_ll(*j, "--jobs");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    return static_cast<int>(jobs);
}

int cmd_list(std::ostream& out) {
    for (const IdentityRecord& e : catalog()) {
        out << "catalog id=" << e.id
            << " status=" << (e.status == EntryStatus::TypoSuspect ? "typo-suspect"
                                                                   : "verified-family")
            << " params=" << schema_string(e) << " constraints=\"" << e.constraints
            << "\" anchor=\"" << e.anchor << "\"\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& argv, std::ostream& out) {
    Args args = Args::parse(argv, 1, {"--id", "--set", "--out", "--jobs"});
    auto id = args.get("--id");
    if (!id) throw UsageError("verify requires --id");
    const IdentityRecord& entry = find_entry(*id);
    std::vector<RangeOverride> overrides;
    for (const std::string& s : args.sets) overrides.push_back(parse_set(s));
    Sink sink(out, args.get("--out"));
    EntryStats stats =
        verify_entry(entry, GridProfile::desk(), overrides, parse_jobs(args),
                     [&](const VerificationOutcome& o) { sink.line(outcome_line(o)); });
    sink.line(entry_line(stats));
    long long failures = entry.status == EntryStatus::VerifiedFamily ? stats.fail : 0;
    int exit_code = failures > 0 ? 1 : 0;
    sink.line("summary entries=1 failures=" + std::to_string(failures) +
              " exit=" + std::to_string(exit_code));
    return exit_code;
}

int cmd_verify_all(const std::vector<std::string>& argv, std::ostream& out) {
    Args args = Args::parse(argv, 1, {"--profile", "--out", "--jobs"});
    std::string profile = args.get("--profile").value_or("desk");
    if (profile != "desk") throw UsageError("unknown profile: " + profile);
    Sink sink(out, args.get("--out"));
    CatalogSummary summary = verify_all(GridProfile::desk(), parse_jobs(args),
                                        [&](std::string_view s) { sink.line(s); });
    return summary.exit_code;
}

int cmd_sequence(const std::vector<std::string>& argv, std::ostream& out) {
    Args args = Args::parse(argv, 1, {"--id", "--count"});
    auto id = args.get("--id");
    auto count = args.get("--count");
    if (!id || !count) throw UsageError("sequence requires --id and --count");
    long long k = parse_ll(*count, "--count");
    if (k < 1) throw UsageError("--count must be >= 1");
    std::string line;
    for (long long n = 0; n < k; ++n) {
        Integer v;
        if (*id == "fib") v = fib(n);
        else if (*id == "lucas") v = lucas(n);
        else if (*id == "a138573") v = a138573_value(n);
        else throw UsageError("unknown sequence: " + *id);
        if (!line.empty()) line += ", ";
        line += v.get_str();
    }
    out << line << '\n';
    return 0;
}

int cmd_cheb(const std::vector<std::string>& argv, std::ostream& out) {
    Args args = Args::parse(argv, 1, {"--kind", "--n", "--at"});
    auto kind_s = args.get("--kind");
    auto n_s = args.get("--n");
    if (!kind_s || !n_s) throw UsageError("cheb requires --kind and --n");
    ChebKind kind;
    if (*kind_s == "T") kind = ChebKind::T;
    else if (*kind_s == "U") kind = ChebKind::U;
    else throw UsageError("--kind must be T or U");
    long long n = parse_ll(*n_s, "--n");
    if (auto at = args.get("--at")) {
        Rational x = parse_rational(*at);
        out << rat_str(cheb_eval(kind, n, x)) << '\n';
    } else {
        out << cheb_poly(kind, n).str() << '\n';
    }
    return 0;
}

int cmd_section5(const std::vector<std::string>& argv, std::ostream& out) {
    Args args = Args::parse(argv, 1, {"--max-total"});
    auto mt = args.get("--max-total");
    if (!mt) throw UsageError("section5 requires --max-total");
    Section5Summary s = verify_section5(parse_ll(*mt, "--max-total"));
    for (const auto& f : s.families)
        out << "s5 family=" << f.name << " checked=" << f.checked
            << " failures=" << f.failures << '\n';
    int exit_code = s.total_failures > 0 ? 1 : 0;
    out << "summary families=" << s.families.size() << " checked=" << s.total_checked
        << " failures=" << s.total_failures << " exit=" << exit_code << '\n';
    return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        if (argv.empty())
            throw UsageError(
                "usage: fibcheb {list | verify | verify-all | sequence | cheb | section5} ...");
        const std::string& cmd = argv[0];
        if (cmd == "list") return cmd_list(out);
        if (cmd == "verify") return cmd_verify(argv, out);
        if (cmd == "verify-all") return cmd_verify_all(argv, out);
        if (cmd == "sequence") return cmd_sequence(argv, out);
        if (cmd == "cheb") return cmd_cheb(argv, out);
        if (cmd == "section5") return cmd_section5(argv, out);
        throw UsageError("unknown subcommand: " + cmd);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

}  // namespace fibcheb::cli
