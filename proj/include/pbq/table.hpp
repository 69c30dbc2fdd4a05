// Knot-table ingestion and batch invariant computation.
//
// Table format: one entry per line, `name<TAB>gauss_code`; blank lines and
// lines starting with '#' are skipped; names must be unique.  Batch reports
// are deterministic regardless of --jobs: rows are sorted by (name, family)
// and every summary count is recomputed from the sorted rows.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pbq/engine.hpp"

namespace pbq {

struct TableEntry {
    std::string name;
    std::string code;
    int line = 0;  // 1-based source line, for error reporting
};

struct TableLoad {
    std::vector<TableEntry> entries;
    std::vector<std::string> errors;  // "line N: message", permissive mode only
};

/// Loads and validates a table file.  In strict mode the first problem
/// throws; otherwise bad lines are reported in `errors` and skipped.
TableLoad load_table(const std::string& path, SignPolicy policy, bool strict);

struct BatchRow {
    std::string name;
    Family family = Family::Sawollek;
    std::optional<InvariantResult> result;
    std::string error;     // set iff result is absent
    int real_crossings = 0;  // diagram size, for the span conjecture
};

struct ConjectureViolation {
    std::string name;
    int z_span = 0;
    int real_crossings = 0;
};

struct BatchSummary {
    // family -> (zero count, nonzero count) over rows with results
    std::map<Family, std::pair<int, int>> zero_nonzero;
    // (A, B) -> entries whose A-polynomial is zero but B-polynomial is not
    std::map<std::pair<Family, Family>, int> detections;
};

struct BatchReport {
    std::vector<BatchRow> rows;  // sorted by (name, family name)
    BatchSummary summary;
    std::vector<ConjectureViolation> conjecture_violations;  // z-parity rows only
};

/// Computes every (entry, family) cell, optionally on `jobs` threads.
/// Per-cell failures become error rows unless `strict`, which rethrows.
BatchReport run_batch(const std::vector<TableEntry>& entries, const std::vector<Family>& families,
                      const QuatParams& params = {}, int jobs = 1,
                      SignPolicy policy = SignPolicy::Strict, bool strict = false);

/// CSV with fixed columns name, family, polynomial, writhe, n_o_bound,
/// n_real_bound, n_v_bound, nonclassical, odd_evidence.  Inapplicable cells
/// are empty; error rows carry "!error: message" in the polynomial column.
std::string batch_csv(const BatchReport& report);

/// JSON with fields entries, summary, conjecture_violations.
nlohmann::json batch_json(const BatchReport& report);

/// Splits one CSV line honoring double-quote escaping; used by the
/// round-trip tests and available to downstream consumers of the reports.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace pbq
