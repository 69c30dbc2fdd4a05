#include "pbq/table.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "pbq/json_io.hpp"

namespace pbq {

TableLoad load_table(const std::string& path, SignPolicy policy, bool strict) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file '" + path + "'");

    TableLoad load;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    auto problem = [&](const std::string& msg) {
        std::string full = "line " + std::to_string(lineno) + ": " + msg;
        if (strict) throw Error(path + ": " + full);
        load.errors.push_back(full);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string::size_type first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::string::size_type tab = line.find('\t');
        if (tab == std::string::npos) {
            problem("expected name<TAB>gauss_code");
            continue;
        }
        TableEntry entry;
        entry.name = line.substr(0, tab);
        entry.code = line.substr(tab + 1);
        entry.line = lineno;
        if (entry.name.empty()) {
            problem("empty entry name");
            continue;
        }
        if (!names.insert(entry.name).second) {
            problem("duplicate entry name '" + entry.name + "'");
            continue;
        }
        try {
            Diagram::parse(entry.code, policy);
        } catch (const Error& e) {
            problem(std::string("'") + entry.name + "': " + e.what());
            continue;
        }
        load.entries.push_back(std::move(entry));
    }
    return load;
}

namespace {

bool row_less(const BatchRow& a, const BatchRow& b) {
    if (a.name != b.name) return a.name < b.name;
    return family_name(a.family) < family_name(b.family);
}

void aggregate(BatchReport& report, const std::vector<Family>& families) {
    for (const auto& row : report.rows) {
        if (!row.result) continue;
        auto& [zero, nonzero] = report.summary.zero_nonzero[row.family];
        (row.result->canonical.is_zero() ? zero : nonzero)++;
    }

    // Per entry, which families produced a zero polynomial.
    std::map<std::string, std::map<Family, bool>> zero_by_name;
    for (const auto& row : report.rows)
        if (row.result) zero_by_name[row.name][row.family] = row.result->canonical.is_zero();

    for (Family a : families)
        for (Family b : families) {
            if (a == b) continue;
            int count = 0;
            for (const auto& [name, zs] : zero_by_name) {
                auto ia = zs.find(a), ib = zs.find(b);
                if (ia != zs.end() && ib != zs.end() && ia->second && !ib->second) ++count;
            }
            report.summary.detections[{a, b}] = count;
        }

    for (const auto& row : report.rows) {
        if (row.family != Family::ZParity || !row.result) continue;
        int span = row.result->bounds.z_span.value_or(0);
        if (span > row.real_crossings)
            report.conjecture_violations.push_back({row.name, span, row.real_crossings});
    }
}

}  // namespace

BatchReport run_batch(const std::vector<TableEntry>& entries, const std::vector<Family>& families,
                      const QuatParams& params, int jobs, SignPolicy policy, bool strict) {
    const std::size_t cells = entries.size() * families.size();
    BatchReport report;
    report.rows.resize(cells);

    auto compute_cell = [&](std::size_t idx) {
        const TableEntry& entry = entries[idx / families.size()];
        Family f = families[idx % families.size()];
        BatchRow row;
        row.name = entry.name;
        row.family = f;
        try {
            Diagram d = Diagram::parse(entry.code, policy);
            row.real_crossings = d.real_crossing_count();
            row.result = compute_invariant(d, f, params);
        } catch (const Error& e) {
            if (strict) throw;
            row.error = e.what();
        }
        report.rows[idx] = std::move(row);
    };

    if (jobs <= 1 || cells <= 1) {
        for (std::size_t i = 0; i < cells; ++i) compute_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1)) {
                try {
                    compute_cell(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        std::size_t n = std::min(static_cast<std::size_t>(jobs), cells);
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::sort(report.rows.begin(), report.rows.end(), row_less);
    aggregate(report, families);
    return report;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_bool(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

}  // namespace

std::string batch_csv(const BatchReport& report) {
    std::string out =
        "name,family,polynomial,writhe,n_o_bound,n_real_bound,n_v_bound,nonclassical,"
        "odd_evidence\n";
    for (const auto& row : report.rows) {
        std::vector<std::string> cells(9);
        cells[0] = row.name;
        cells[1] = family_name(row.family);
        if (row.result) {
            const InvariantResult& r = *row.result;
            cells[2] = r.canonical.str();
            cells[3] = std::to_string(r.writhe);
            cells[4] = opt_int(r.bounds.n_o_bound);
            cells[5] = opt_int(r.bounds.n_real_bound);
            cells[6] = opt_int(r.bounds.n_v_bound);
            cells[7] = opt_bool(r.flags.nonclassical);
            cells[8] = opt_bool(r.flags.odd_evidence);
        } else {
            cells[2] = "!error: " + row.error;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json batch_json(const BatchReport& report) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto& row : report.rows) {
        if (row.result) {
            json e = invariant_json(*row.result);
            e["name"] = row.name;
            e["real_crossings"] = row.real_crossings;
            entries.push_back(std::move(e));
        } else {
            entries.push_back(json{{"name", row.name},
                                   {"family", family_name(row.family)},
                                   {"error", row.error}});
        }
    }

    json families = json::object();
    for (const auto& [f, counts] : report.summary.zero_nonzero)
        families[family_name(f)] = json{{"zero", counts.first}, {"nonzero", counts.second}};
    json detections = json::object();
    for (const auto& [pair, count] : report.summary.detections)
        detections[family_name(pair.first) + "->" + family_name(pair.second)] = count;

    json violations = json::array();
    for (const auto& v : report.conjecture_violations)
        violations.push_back(json{{"name", v.name},
                                  {"z_span", v.z_span},
                                  {"real_crossings", v.real_crossings}});

    return json{{"entries", entries},
                {"summary", json{{"families", families}, {"detections", detections}}},
                {"conjecture_violations", violations}};
}

}  // namespace pbq
