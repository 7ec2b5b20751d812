#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qlucas/harness.hpp"

namespace qlucas {

// One side of a printed equation, e.g. "(-6)^2+5\cdot (-7)^2".
struct PrintedTerm {
    i64 coefficient = 1;
    i64 base = 0;
    bool squared = true;
};

struct PrintedEquation {
    std::string text;
    u64 label = 0;
    PrintedTerm x, dy;
    std::optional<PrintedTerm> u, v; // absent when only x^2 + d y^2 is printed
    std::vector<std::string> typography; // doubled '+', \dot for \cdot, ...
};

// Parses "label=x-part=uv-part" with the uv-part optional. Throws ConfigError
// on text it cannot make sense of.
PrintedEquation parse_printed_equation(const std::string& text);

enum class ErratumKind { label, not_prime, missing_square, wrong_coefficient, wrong_value, mismatch_decomposition, typography };

std::string_view to_string(ErratumKind k) noexcept;

struct Erratum {
    ErratumKind kind;
    std::string message;
};

struct WitnessEntry {
    i64 b = 0;
    u64 listed = 0;             // prime as given in the list
    u64 used = 0;               // prime actually checked after corrections
    CaseId intended;
    std::optional<PrintedEquation> printed;
    std::optional<NormalizedRep> rep;
    std::optional<CaseId> actual;
    Status status = Status::skipped;
    bool printed_matches = false; // printed (x, y, u, v) equal the computed ones up to sign
    bool lands = false;           // actual == intended
    bool uv_printed = false;
    std::vector<Erratum> errata;
};

struct WitnessReport {
    std::vector<WitnessEntry> entries;
    std::set<CaseId> covered;
    std::vector<CaseId> missing;

    bool all_land() const noexcept;
    bool all_match() const noexcept;
    bool all_covered() const noexcept { return missing.empty(); }
    std::size_t errata_count() const noexcept;
};

// Re-derives the reference witness table (b = 1, 3, 4; 2, 6, 10, 14; 8, 16).
WitnessReport witness_table();

std::string describe(const WitnessReport& report);

} // namespace qlucas
