#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qlucas/lucas.hpp"
#include "qlucas/oracle.hpp"
#include "qlucas/quartic.hpp"
#include "qlucas/represent.hpp"

namespace qlucas {

enum class Status { match, mismatch, skipped };

std::string_view to_string(Status s) noexcept;

struct VerifyRecord {
    i64 b = 0;
    u64 p = 0;
    i64 d = 0;
    Status status = Status::skipped;
    std::string skip_reason;
    std::optional<NormalizedRep> rep;
    std::optional<CaseId> case_id;
    Prediction predicted;
    LucasPair actual;
    Mu4 eta_pred;
    EtaPair eta_extracted;
    bool uv_agrees = false;
    bool eta_agrees = false;
    bool dictionary_agrees = false;
    // Set when a library error interrupted the check; the record is then a mismatch.
    std::string error;

    bool checked() const noexcept { return status != Status::skipped; }
};

// Never throws for library errors: they end up in the record.
VerifyRecord verify_one(i64 b, u64 p);
VerifyRecord verify_one(i64 b, const PrimeField& field);

// Human-readable skip reason with b, d, p substituted, e.g. "(5/13) = -1".
std::string skip_text(GateFailure failure, i64 b, i64 d, u64 p);

enum class ReportFormat { jsonl, csv };

struct SweepSpec {
    std::set<int> conjectures{1, 2, 3, 4};
    i64 b_min = 1;
    i64 b_max = 59;
    u64 p_max = 20000; // inclusive
    unsigned jobs = 1;
    std::string output; // empty: no file
    ReportFormat format = ReportFormat::jsonl;
    bool keep_records = true;

    // Throws ConfigError.
    void validate() const;
    // Nonzero b in [b_min, b_max] whose conjecture is selected.
    std::vector<i64> b_values() const;
};

// key = value lines; '#' starts a comment. Keys: conjecture (comma list),
// b_min, b_max, p_max, jobs, out, format. Throws ConfigError.
SweepSpec load_config(const std::string& path, SweepSpec base = {});

struct SweepReport {
    u64 checked = 0;
    u64 matched = 0;
    u64 skipped = 0;
    u64 eta_agreements = 0;
    u64 dictionary_agreements = 0;
    std::vector<VerifyRecord> mismatches; // sorted by (b, p)
    std::map<CaseId, u64> coverage;
    std::vector<VerifyRecord> records; // checked records, sorted by (b, p)
    double wall_time = 0.0;
};

/*
 * Every selected b against every prime p == 1 (mod 4) up to p_max. Prime blocks
 * are handed to spec.jobs workers; the merged result does not depend on the
 * worker count. Writes spec.output when set (IoError on failure).
 */
SweepReport sweep(const SweepSpec& spec);

} // namespace qlucas
