// suite.hpp -- the bundled one-shot verification suite

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parikh/limits.hpp"
#include "parikh/prs.hpp"

namespace parikh {

/// Resource profiles for the suite.
///   zero        run nothing (every entry reports skipped)
///   quick       only the sub-second entries
///   standard    everything except the gated high-memory entry
///   high_memory everything, with the state cap raised for the one entry
///               whose anagram class has ~6.2e7 members
enum class BudgetProfile { zero, quick, standard, high_memory };

/// Parses "zero" / "quick" / "default" / "high-memory".
BudgetProfile parse_budget(const std::string& name);

enum class EntryStatus { pass, fail, skipped };

const char* to_string(EntryStatus status);

struct SuiteEntryResult {
    std::string id;       // stable entry identifier, e.g. "A07"
    std::string anchor;   // short name of the claim the entry certifies
    EntryStatus status = EntryStatus::skipped;
    std::string detail;   // witness or failure description, empty on pass
    double millis = 0.0;  // wall time of the check
    double budget_ms = 0.0;
    bool gated = false;   // excluded from the standard profile
    bool within_budget = true;
};

struct SuiteReport {
    std::vector<SuiteEntryResult> entries;

    int passed() const;
    int failed() const;
    int skipped() const;

    /// 0 all run entries passed, 1 some entry failed, 2 nothing failed
    /// but a non-gated entry was skipped.
    int exit_code() const;
};

struct SuiteOptions {
    BudgetProfile profile = BudgetProfile::standard;
    SearchLimits limits;
    Parallelism parallelism;

    /// Restrict the run to these entry ids (empty: run all).
    std::vector<std::string> only_ids;

    /// Replacements for the systems the entries exercise, keyed by preset
    /// name.  Meant for fault-injection tests; normal runs leave it empty.
    std::map<std::string, ParikhRewritingSystem> prs_overrides;
    std::map<std::string, ThueSystem> thue_overrides;
};

/// Runs every selected entry and collects pass/fail/skip results with
/// witnesses and timings.  Entries are independent and may run on several
/// workers; the report order is fixed by entry id regardless.
SuiteReport run_verification_suite(const SuiteOptions& options = {});

/// Plain-text table, one line per entry plus a summary line.
std::string format_report(const SuiteReport& report);

/// JSON form: entry id, anchor, status, witness detail, wall time.
std::string to_json(const SuiteReport& report, int indent = -1);

} // namespace parikh
