#pragma once

// The executable identity catalog and its verification engine.  Each record
// transcribes one printed display: the left side is always evaluated by
// direct summation (the sum itself is the oracle), the right side by its
// closed form, both exactly in the record's declared tower.  Records whose
// printed display the oracle contradicts are catalogued as typo-suspect and
// carry a corrected reading alongside the printed one; they are reported
// separately and never affect exit status.

#include "fibcheb/algebra.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fibcheb {

struct ConstraintViolation : UsageError {
    using UsageError::UsageError;
};

// One grid point.  Every catalogued identity draws its parameters from this
// fixed name set; inactive fields stay 0.
struct Pt {
    long long n = 0, p = 0, q = 0, t = 0, m = 0, s = 0, x = 0, sg = 0;

    long long get(std::string_view name) const;
    void set(std::string_view name, long long value);
    static bool valid_name(std::string_view name);
};

struct ParamRange {
    std::string name;
    long long lo = 0, hi = 0;  // inclusive
};

enum class EntryStatus { VerifiedFamily, TypoSuspect };
enum class TowerKind { Q, Sqrt5, Gauss };

using Evaluator = std::function<QuadElem(const Pt&)>;

struct IdentityRecord {
    std::string id;
    std::string anchor;       // formula sketch identifying the display
    std::string constraints;  // human-readable parameter hypotheses
    std::string note;         // typo-suspect: what is suspected + corrected reading
    std::vector<ParamRange> params;  // iteration order; desk ranges baked in
    std::function<bool(const Pt&)> admissible;  // null = every grid point
    TowerKind tower = TowerKind::Q;
    Evaluator lhs, rhs;                       // the printed display
    Evaluator corrected_lhs, corrected_rhs;   // typo-suspect only
    EntryStatus status = EntryStatus::VerifiedFamily;
    bool poly_checkable = false;
};

// The full catalog, built once, immutable afterwards.
const std::vector<IdentityRecord>& catalog();
const IdentityRecord& find_entry(const std::string& id);  // throws UsageError

bool is_admissible(const IdentityRecord& entry, const Pt& pt);

// Both sides of the printed display at one admissible point.
std::pair<QuadElem, QuadElem> evaluate(const std::string& id, const Pt& pt);

// Coefficientwise comparison for the generic-x entries
// (t.main1.*, t.main3, t.main4, ex8.gen, u.main5.*, u.main6, u.main7, lem8).
// Typo-suspect entries are checked in their corrected reading.
bool poly_identity_check(const std::string& id, long long n);

struct GridProfile {
    std::string name;
    static GridProfile desk();
};

enum class PointStatus { Pass, Fail, Skipped };

struct VerificationOutcome {
    enum class Form { Std, Printed, Corrected };
    std::string id;
    Form form = Form::Std;
    std::string params;   // "n:3,p:-2" in declared parameter order
    PointStatus status = PointStatus::Skipped;
    std::string lhs, rhs;  // canonical grammar; empty on skipped points
    // Reported as 0: reports must be byte-identical across runs and --jobs.
    std::uint64_t elapsed_us = 0;
};

struct RangeOverride {
    std::string name;
    long long lo = 0, hi = 0;
};

struct EntryStats {
    std::string id;
    EntryStatus status = EntryStatus::VerifiedFamily;
    long long points = 0, pass = 0, fail = 0, skipped = 0;
    long long corrected_pass = 0, corrected_fail = 0;
};

// Runs one entry over its grid.  Overrides replace the stored ranges (the
// per-point constraints still apply; violating points are reported as
// skipped-constraint).  Outcomes arrive in deterministic lexicographic
// order regardless of `jobs`.
EntryStats verify_entry(const IdentityRecord& entry, const GridProfile& profile,
                        const std::vector<RangeOverride>& overrides, int jobs,
                        const std::function<void(const VerificationOutcome&)>& sink);

// Convenience wrapper collecting the outcomes of a single entry.
std::vector<VerificationOutcome> verify(const std::string& id, const GridProfile& profile,
                                        const std::vector<RangeOverride>& overrides = {},
                                        int jobs = 1);

struct CatalogSummary {
    std::vector<EntryStats> entries;
    long long failures = 0;  // verified-family failures only
    int exit_code = 0;       // 0 clean, 1 verified-family failure
};

// Runs every entry in catalog order, emitting one line per record through
// `emit_line` (point records, per-entry records, the typo-suspect section,
// and a final summary record).
CatalogSummary verify_all(const GridProfile& profile, int jobs,
                          const std::function<void(std::string_view)>& emit_line);

std::string outcome_line(const VerificationOutcome& o);
std::string entry_line(const EntryStats& s);
std::string schema_string(const IdentityRecord& entry);

// Exact value of A138573(n) = (T_n(alpha) - T_n(beta))/sqrt(5).
Integer a138573_value(long long n);

}  // namespace fibcheb
