// pbq: parity-biquandle polynomial invariants of virtual knots and links.
//
// Exit codes: 0 success, 1 bad input (malformed code, unknown family, failed
// axiom verification, unusable table), 2 internal error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbq/json_io.hpp"
#include "pbq/table.hpp"

namespace {

pbq::SignPolicy policy_of(bool permissive) {
    return permissive ? pbq::SignPolicy::Permissive : pbq::SignPolicy::Strict;
}

pbq::QuatParams quat_params_of(const std::string& units) {
    auto comma = units.find(',');
    if (comma == std::string::npos)
        throw pbq::Error("--quaternion-units expects two units like \"i,j\"");
    pbq::QuatParams p;
    p.u = pbq::parse_quat_unit(units.substr(0, comma));
    p.v = pbq::parse_quat_unit(units.substr(comma + 1));
    return p;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity-biquandle polynomial invariants of virtual knots and links"};
    app.require_subcommand(1);

    std::string code, family_name_arg, units = "i,j", table_path, out_path;
    std::vector<std::string> family_list;
    bool permissive = false, strict = false;
    int components = 3, jobs = 1;

    CLI::App* parse_cmd = app.add_subcommand("parse", "Validate a Gauss code and echo its canonical form");
    parse_cmd->add_option("code", code, "Gauss code")->required();
    parse_cmd->add_flag("--permissive-signs", permissive, "Default missing signs to +");

    CLI::App* parity_cmd = app.add_subcommand("parity", "Classify each real crossing as even, odd or link");
    parity_cmd->add_option("code", code, "Gauss code")->required();
    parity_cmd->add_flag("--permissive-signs", permissive, "Default missing signs to +");

    CLI::App* invariant_cmd = app.add_subcommand("invariant", "Compute one family's polynomial invariant");
    invariant_cmd->add_option("code", code, "Gauss code")->required();
    invariant_cmd->add_option("--family", family_name_arg, "Invariant family")->required();
    invariant_cmd->add_option("--quaternion-units", units, "Units U,V for quaternionic families (default i,j)");
    invariant_cmd->add_flag("--permissive-signs", permissive, "Default missing signs to +");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Crossing-number lower bounds from one family");
    bounds_cmd->add_option("code", code, "Gauss code")->required();
    bounds_cmd->add_option("--family", family_name_arg, "Invariant family")->required();
    bounds_cmd->add_option("--quaternion-units", units, "Units U,V for quaternionic families (default i,j)");
    bounds_cmd->add_flag("--permissive-signs", permissive, "Default missing signs to +");

    CLI::App* verify_cmd = app.add_subcommand("verify-axioms", "Verify a family's switch axioms symbolically");
    verify_cmd->add_option("--family", family_name_arg, "Invariant family")->required();
    verify_cmd->add_option("--components", components, "Component count to instantiate (default 3)")
        ->check(CLI::Range(1, 8));
    verify_cmd->add_option("--quaternion-units", units, "Units U,V for quaternionic families (default i,j)");

    CLI::App* batch_cmd = app.add_subcommand("batch", "Run families over a knot table file");
    batch_cmd->add_option("table", table_path, "Table file (name<TAB>gauss_code)")->required();
    batch_cmd->add_option("--families", family_list, "Families to compute")
        ->required()
        ->delimiter(',');
    batch_cmd->add_option("--out", out_path, "Report path, format by extension (.csv or .json)");
    batch_cmd->add_option("--quaternion-units", units, "Units U,V for quaternionic families (default i,j)");
    batch_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    batch_cmd->add_flag("--strict", strict, "Any table or computation error aborts");
    batch_cmd->add_flag("--permissive-signs", permissive, "Default missing signs to +");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*parse_cmd) {
            print_json(pbq::diagram_json(pbq::Diagram::parse(code, policy_of(permissive))));
        } else if (*parity_cmd) {
            print_json(pbq::parity_json(pbq::Diagram::parse(code, policy_of(permissive))));
        } else if (*invariant_cmd || *bounds_cmd) {
            pbq::Diagram d = pbq::Diagram::parse(code, policy_of(permissive));
            pbq::Family family = pbq::parse_family(family_name_arg);
            pbq::InvariantResult res = pbq::compute_invariant(d, family, quat_params_of(units));
            print_json(*invariant_cmd ? pbq::invariant_json(res) : pbq::bounds_json(res.bounds));
        } else if (*verify_cmd) {
            pbq::Family family = pbq::parse_family(family_name_arg);
            pbq::AxiomReport report =
                pbq::family_is_quaternionic(family)
                    ? pbq::verify_ruleset(
                          pbq::make_quaternionic_ruleset(family, components, quat_params_of(units)))
                    : pbq::verify_ruleset(pbq::make_alexander_ruleset(family, components));
            std::cout << "family: " << pbq::family_name(family) << "  (components: " << components
                      << ")\n"
                      << report.str();
            if (!report.required_pass()) {
                std::cout << "result: FAIL\n";
                return 1;
            }
            std::cout << "result: PASS\n";
        } else if (*batch_cmd) {
            std::vector<pbq::Family> families;
            for (const auto& name : family_list) families.push_back(pbq::parse_family(name));
            pbq::TableLoad load = load_table(table_path, policy_of(permissive), strict);
            for (const auto& err : load.errors)
                std::cerr << "warning: " << table_path << ": " << err << "\n";
            pbq::BatchReport report = run_batch(load.entries, families, quat_params_of(units),
                                                jobs, policy_of(permissive), strict);
            if (out_path.empty()) {
                print_json(batch_json(report));
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw pbq::Error("cannot write '" + out_path + "'");
                if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv")
                    out << batch_csv(report);
                else if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json")
                    out << batch_json(report).dump(2) << "\n";
                else
                    throw pbq::Error("--out must end in .csv or .json");
                std::cout << "wrote " << out_path << " (" << report.rows.size() << " rows, "
                          << load.entries.size() << " entries)\n";
            }
        }
    } catch (const pbq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
