#include "fibcheb/identities.hpp"

#include "fibcheb/chebyshev.hpp"
#include "fibcheb/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

namespace fibcheb {

namespace cat {
void build_sec2a(std::vector<IdentityRecord>& out);
void build_sec2b(std::vector<IdentityRecord>& out);
void build_sec3(std::vector<IdentityRecord>& out);
void build_sec4(std::vector<IdentityRecord>& out);
}  // namespace cat

long long Pt::get(std::string_view name) const {
    if (name == "n") return n;
    if (name == "p") return p;
    if (name == "q") return q;
    if (name == "t") return t;
    if (name == "m") return m;
    if (name == "s") return s;
    if (name == "x") return x;
    if (name == "sg") return sg;
    throw UsageError("unknown parameter: " + std::string(name));
}

void Pt::set(std::string_view name, long long value) {
    if (name == "n") n = value;
    else if (name == "p") p = value;
    else if (name == "q") q = value;
    else if (name == "t") t = value;
    else if (name == "m") m = value;
    else if (name == "s") s = value;
    else if (name == "x") x = value;
    else if (name == "sg") sg = value;
    else throw UsageError("unknown parameter: " + std::string(name));
}

bool Pt::valid_name(std::string_view name) {
    static const char* names[] = {"n", "p", "q", "t", "m", "s", "x", "sg"};
    for (const char* c : names)
        if (name == c) return true;
    return false;
}

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> entries = [] {
        std::vector<IdentityRecord> out;
        cat::build_sec2a(out);
        cat::build_sec2b(out);
        cat::build_sec3(out);
        cat::build_sec4(out);
        return out;
    }();
    return entries;
}

const IdentityRecord& find_entry(const std::string& id) {
    static const std::map<std::string, std::size_t> index = [] {
        std::map<std::string, std::size_t> m;
        const auto& cat = catalog();
        for (std::size_t i = 0; i < cat.size(); ++i) m[cat[i].id] = i;
        return m;
    }();
    auto it = index.find(id);
    if (it == index.end()) throw UsageError("unknown identity: " + id);
    return catalog()[it->second];
}

bool is_admissible(const IdentityRecord& entry, const Pt& pt) {
    return !entry.admissible || entry.admissible(pt);
}

std::pair<QuadElem, QuadElem> evaluate(const std::string& id, const Pt& pt) {
    const IdentityRecord& e = find_entry(id);
    if (!is_admissible(e, pt))
        throw ConstraintViolation("point violates the constraints of " + id);
    return {e.lhs(pt), e.rhs(pt)};
}

GridProfile GridProfile::desk() { return GridProfile{"desk"}; }

namespace {

std::string params_string(const IdentityRecord& entry, const Pt& pt) {
    std::string out;
    for (const ParamRange& pr : entry.params) {
        if (!out.empty()) out += ',';
        out += pr.name;
        out += ':';
        out += std::to_string(pt.get(pr.name));
    }
    return out;
}

struct PointResult {
    bool skipped = false;
    bool pass = false;
    std::string params, lhs, rhs;
    bool cpass = false;
    std::string clhs, crhs;
};

}  // namespace

EntryStats verify_entry(const IdentityRecord& entry, const GridProfile&,
                        const std::vector<RangeOverride>& overrides, int jobs,
                        const std::function<void(const VerificationOutcome&)>& sink) {
    std::vector<ParamRange> ranges = entry.params;
    for (const RangeOverride& o : overrides) {
        auto it = std::find_if(ranges.begin(), ranges.end(),
                               [&](const ParamRange& r) { return r.name == o.name; });
        if (it == ranges.end())
            throw UsageError("entry " + entry.id + " has no parameter named " + o.name);
        it->lo = o.lo;
        it->hi = o.hi;
    }

    long long total = 1;
    for (const ParamRange& r : ranges) {
        long long size = r.hi >= r.lo ? r.hi - r.lo + 1 : 0;
        total *= size;
    }

    // Lexicographic order over the declared parameters: index -> point.
    auto point_at = [&](long long idx) {
        Pt pt;
        for (std::size_t i = ranges.size(); i-- > 0;) {
            long long size = ranges[i].hi - ranges[i].lo + 1;
            pt.set(ranges[i].name, ranges[i].lo + idx % size);
            idx /= size;
        }
        return pt;
    };

    const bool has_corrected =
        entry.status == EntryStatus::TypoSuspect && entry.corrected_lhs && entry.corrected_rhs;

    std::vector<PointResult> results(static_cast<std::size_t>(total));
    auto eval_point = [&](long long idx) {
        Pt pt = point_at(idx);
        PointResult& r = results[static_cast<std::size_t>(idx)];
        r.params = params_string(entry, pt);
        if (!is_admissible(entry, pt)) {
            r.skipped = true;
            return;
        }
        QuadElem lhs = entry.lhs(pt);
        QuadElem rhs = entry.rhs(pt);
        r.lhs = lhs.str();
        r.rhs = rhs.str();
        r.pass = lhs == rhs;
        if (has_corrected) {
            QuadElem cl = entry.corrected_lhs(pt);
            QuadElem cr = entry.corrected_rhs(pt);
            r.clhs = cl.str();
            r.crhs = cr.str();
            r.cpass = cl == cr;
        }
    };

    if (jobs <= 1 || total < 2) {
        for (long long idx = 0; idx < total; ++idx) eval_point(idx);
    } else {
        std::atomic<long long> next{0};
        const long long block = 64;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back([&, j] {
                try {
                    for (;;) {
                        long long start = next.fetch_add(block);
                        if (start >= total) return;
                        long long end = std::min(start + block, total);
                        for (long long idx = start; idx < end; ++idx) eval_point(idx);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(j)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    EntryStats stats;
    stats.id = entry.id;
    stats.status = entry.status;
    stats.points = total;
    const auto main_form = entry.status == EntryStatus::TypoSuspect
                               ? VerificationOutcome::Form::Printed
                               : VerificationOutcome::Form::Std;
    for (long long idx = 0; idx < total; ++idx) {
        const PointResult& r = results[static_cast<std::size_t>(idx)];
        VerificationOutcome o;
        o.id = entry.id;
        o.form = main_form;
        o.params = r.params;
        if (r.skipped) {
            o.status = PointStatus::Skipped;
            ++stats.skipped;
        } else if (r.pass) {
            o.status = PointStatus::Pass;
            o.lhs = r.lhs;
            o.rhs = r.rhs;
            ++stats.pass;
        } else {
            o.status = PointStatus::Fail;
            o.lhs = r.lhs;
            o.rhs = r.rhs;
            ++stats.fail;
        }
        sink(o);
        if (has_corrected && !r.skipped) {
            VerificationOutcome co;
            co.id = entry.id;
            co.form = VerificationOutcome::Form::Corrected;
            co.params = r.params;
            co.status = r.cpass ? PointStatus::Pass : PointStatus::Fail;
            co.lhs = r.clhs;
            co.rhs = r.crhs;
            (r.cpass ? stats.corrected_pass : stats.corrected_fail)++;
            sink(co);
        }
    }
    return stats;
}

std::vector<VerificationOutcome> verify(const std::string& id, const GridProfile& profile,
                                        const std::vector<RangeOverride>& overrides, int jobs) {
    std::vector<VerificationOutcome> out;
    verify_entry(find_entry(id), profile, overrides, jobs,
                 [&](const VerificationOutcome& o) { out.push_back(o); });
    return out;
}

namespace {

const char* form_name(VerificationOutcome::Form f) {
    switch (f) {
        case VerificationOutcome::Form::Std: return "std";
        case VerificationOutcome::Form::Printed: return "printed";
        case VerificationOutcome::Form::Corrected: return "corrected";
    }
    return "?";
}

const char* status_name(PointStatus s) {
    switch (s) {
        case PointStatus::Pass: return "pass";
        case PointStatus::Fail: return "fail";
        case PointStatus::Skipped: return "skipped-constraint";
    }
    return "?";
}

const char* entry_status_name(EntryStatus s) {
    return s == EntryStatus::TypoSuspect ? "typo-suspect" : "verified-family";
}

}  // namespace

std::string outcome_line(const VerificationOutcome& o) {
    std::string line = "point id=";
    line += o.id;
    line += " form=";
    line += form_name(o.form);
    line += " params=";
    line += o.params;
    line += " status=";
    line += status_name(o.status);
    line += " lhs=\"";
    line += o.lhs;
    line += "\" rhs=\"";
    line += o.rhs;
    line += "\" us=";
    line += std::to_string(o.elapsed_us);
    return line;
}

std::string entry_line(const EntryStats& s) {
    std::string line = "entry id=";
    line += s.id;
    line += " status=";
    line += entry_status_name(s.status);
    line += " points=" + std::to_string(s.points);
    line += " pass=" + std::to_string(s.pass);
    line += " fail=" + std::to_string(s.fail);
    line += " skipped=" + std::to_string(s.skipped);
    line += " corrected_pass=" + std::to_string(s.corrected_pass);
    line += " corrected_fail=" + std::to_string(s.corrected_fail);
    return line;
}

std::string schema_string(const IdentityRecord& entry) {
    std::string out;
    for (const ParamRange& pr : entry.params) {
        if (!out.empty()) out += ',';
        out += pr.name + ":" + std::to_string(pr.lo) + ".." + std::to_string(pr.hi);
    }
    return out;
}

CatalogSummary verify_all(const GridProfile& profile, int jobs,
                          const std::function<void(std::string_view)>& emit_line) {
    CatalogSummary summary;
    for (const IdentityRecord& entry : catalog()) {
        EntryStats stats = verify_entry(entry, profile, {}, jobs,
                                        [&](const VerificationOutcome& o) { emit_line(outcome_line(o)); });
        emit_line(entry_line(stats));
        if (entry.status == EntryStatus::VerifiedFamily) summary.failures += stats.fail;
        summary.entries.push_back(std::move(stats));
    }
    for (const EntryStats& s : summary.entries) {
        if (s.status != EntryStatus::TypoSuspect) continue;
        const IdentityRecord& entry = find_entry(s.id);
        std::string line = "typo-suspect id=" + s.id;
        line += " printed_pass=" + std::to_string(s.pass);
        line += " printed_fail=" + std::to_string(s.fail);
        line += " corrected_pass=" + std::to_string(s.corrected_pass);
        line += " corrected_fail=" + std::to_string(s.corrected_fail);
        line += " note=\"" + entry.note + "\"";
        emit_line(line);
    }
    summary.exit_code = summary.failures > 0 ? 1 : 0;
    std::size_t suspects = 0;
    for (const EntryStats& s : summary.entries)
        if (s.status == EntryStatus::TypoSuspect) ++suspects;
    std::string line = "summary entries=" + std::to_string(summary.entries.size());
    line += " verified_family=" + std::to_string(summary.entries.size() - suspects);
    line += " typo_suspect=" + std::to_string(suspects);
    line += " failures=" + std::to_string(summary.failures);
    line += " exit=" + std::to_string(summary.exit_code);
    emit_line(line);
    return summary;
}

Integer a138573_value(long long n) {
    auto [alpha, beta] = golden();
    QuadElem diff = cheb_eval(ChebKind::T, n, alpha) - cheb_eval(ChebKind::T, n, beta);
    Rational v = (diff / sqrt5_elem()).rational_value();
    if (v.get_den() != 1) throw ArithmeticError("A138573 value is not an integer");
    return v.get_num();
}

namespace {

// Shared polynomial pieces for the generic-x checks.
Poly binomial_sum_T(long long n, int two_sign, const Poly& base) {
    // sum_k (sign*2)^k c(n,k) base^k
    Poly acc;
    Poly pw(Rational(1));
    Rational w(1);
    for (long long k = 0; k <= n; ++k) {
        acc = acc + (w * coeff_c(n, k)) * pw;
        pw = pw * base;
        w *= Rational(2 * two_sign);
    }
    return acc;
}

Poly binomial_sum_U(long long n, long scale, const Poly& base) {
    // sum_{k>=1} scale^k d(n,k) base^{k-1}
    Poly acc;
    Poly pw(Rational(1));
    Rational w(scale);
    for (long long k = 1; k <= n; ++k) {
        acc = acc + (w * coeff_d(n, k)) * pw;
        pw = pw * base;
        w *= Rational(scale);
    }
    return acc;
}

}  // namespace

bool poly_identity_check(const std::string& id, long long n) {
    if (n < 0) throw UsageError("poly_identity_check requires n >= 0");
    const Poly X = Poly::x();
    const Poly ONE(Rational(1));
    const Rational sgn_n(parity_sign(n));

    if (id == "t.main1.upper")
        return binomial_sum_T(n, -1, ONE - X) == cheb_poly(ChebKind::T, n);
    if (id == "t.main1.lower")
        return binomial_sum_T(n, -1, ONE + X) == sgn_n * cheb_poly(ChebKind::T, n);
    if (id == "t.main3")
        return binomial_sum_T(n, 2, X * X - ONE) == cheb_poly(ChebKind::T, 2 * n);
    if (id == "t.main4")
        return binomial_sum_T(n, -2, X * X) == sgn_n * cheb_poly(ChebKind::T, 2 * n);
    if (id == "ex8.gen") {
        Poly plus = binomial_sum_T(n, -1, ONE + X);
        Poly minus = binomial_sum_T(n, -1, ONE - X);
        Poly tn = cheb_poly(ChebKind::T, n);
        return plus - minus == (sgn_n - Rational(1)) * tn &&
               plus + minus == (sgn_n + Rational(1)) * tn;
    }
    if (id == "lem8") {
        Poly lhs;
        Poly pw(Rational(1));
        Rational w(1);
        for (long long k = 0; k <= n; ++k) {
            lhs = lhs + (w * Rational(binom(n + k, n - k))) * pw;
            pw = pw * X * X;
            w *= Rational(-4);
        }
        return lhs == sgn_n * cheb_poly(ChebKind::U, 2 * n);
    }
    if (n < 1) throw UsageError("poly_identity_check requires n >= 1 for " + id);
    if (id == "u.main5.upper")
        return binomial_sum_U(n, -2, ONE - X) == Rational(-1) * cheb_poly(ChebKind::U, n - 1);
    if (id == "u.main5.lower")  // corrected reading; the printed sign fails for odd n
        return binomial_sum_U(n, -2, ONE + X) == sgn_n * cheb_poly(ChebKind::U, n - 1);
    if (id == "u.main6")
        return binomial_sum_U(n, 4, X * X - ONE) == cheb_poly(ChebKind::U, 2 * n - 1).shift_down(1);
    if (id == "u.main7") {
        Poly lhs;
        Poly pw = X * X;
        Rational w(-4);
        for (long long k = 1; k <= n; ++k) {
            lhs = lhs + (w * coeff_d(n, k)) * pw;
            pw = pw * X * X;
            w *= Rational(-4);
        }
        return lhs == sgn_n * (X * cheb_poly(ChebKind::U, 2 * n - 1));
    }
    throw UsageError("identity is not generic-x poly-checkable: " + id);
}

}  // namespace fibcheb
