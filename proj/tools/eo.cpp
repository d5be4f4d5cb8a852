// Command line front end. Subcommands cover the counting sequences, the
// patch-system solver, map enumeration, the named check suite, the growth
// table and the balanced-tree table.
//
// Exit codes: 0 success, 1 check or runtime failure, 2 usage error,
// 3 resource ceiling exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eo/asym.hpp"
#include "eo/checks.hpp"
#include "eo/closedform.hpp"
#include "eo/config.hpp"
#include "eo/fesolver.hpp"
#include "eo/maps.hpp"
#include "eo/serialize.hpp"
#include "eo/trees.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

eo::Family parse_family(const std::string& s) {
    if (s == "quartic") return eo::Family::Quartic;
    if (s == "general") return eo::Family::General;
    throw CLI::ValidationError("--family", "expected 'quartic' or 'general'");
}

eo::SystemKind parse_system(const std::string& s) {
    if (s == "quartic") return eo::SystemKind::Quartic;
    if (s == "colourful") return eo::SystemKind::Colourful;
    throw CLI::ValidationError("--system", "expected 'quartic' or 'colourful'");
}

// all data goes to --out when given, stdout otherwise
int deliver(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitFailure;
    }
    os << data;
    if (!os.flush()) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kExitFailure;
    }
    return kExitOk;
}

eo::ordered_json triple_to_json(const eo::FESystem& sys) {
    eo::SolvedTriple tr = sys.published();
    eo::ordered_json j;
    j["system"] = eo::system_name(tr.kind);
    j["order"] = tr.order;
    j["window"] = sys.window();
    j["x_out"] = tr.x_out;
    j["P"] = eo::to_json(tr.P);
    j["C"] = eo::to_json(tr.C);
    j["D"] = eo::to_json(tr.D);
    if (tr.order >= 1) j["Q"] = eo::to_json(sys.extract_Q());
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of planar Eulerian orientations"};
    app.require_subcommand(1);
    app.fallthrough(); // global ceilings may follow the subcommand name

    eo::Limits env = eo::load_limits();
    long max_edges = env.max_edges;
    long max_order = env.max_order;
    long precision_bits = env.precision_bits;
    app.add_option("--max-edges", max_edges, "enumeration ceiling in edges");
    app.add_option("--max-order", max_order, "series truncation ceiling");
    app.add_option("--precision-bits", precision_bits, "floating point working precision");

    // sequence
    std::string seq_family;
    long seq_count = 0;
    bool seq_json = false;
    auto* seq = app.add_subcommand("sequence", "print leading terms of the counting sequence");
    seq->add_option("--family", seq_family, "quartic or general")->required();
    seq->add_option("--count", seq_count, "number of terms")->required()
        ->check(CLI::NonNegativeNumber);
    seq->add_flag("--json", seq_json, "emit JSON instead of text");

    // solve-system
    std::string sys_name, sys_out;
    long sys_order = 0, sys_window = -1;
    auto* slv = app.add_subcommand("solve-system", "solve the patch system, emit the triple as JSON");
    slv->add_option("--system", sys_name, "quartic or colourful")->required();
    slv->add_option("--order", sys_order, "truncation level")->required()
        ->check(CLI::NonNegativeNumber);
    slv->add_option("--window", sys_window, "override the internal x window");
    slv->add_option("--out", sys_out, "output path (default stdout)");

    // enumerate
    long enum_edges = -1;
    std::vector<long> enum_degrees;
    bool enum_all_genus = false;
    std::string enum_out;
    auto* enu = app.add_subcommand("enumerate", "list rooted maps, one per line");
    enu->add_option("--edges", enum_edges, "number of edges")->required()
        ->check(CLI::NonNegativeNumber);
    enu->add_option("--degrees", enum_degrees, "restrict vertex degrees")->delimiter(',');
    enu->add_flag("--all-genus", enum_all_genus, "drop the planarity filter");
    enu->add_option("--out", enum_out, "output path (default stdout)");

    // verify
    std::string ver_check;
    bool ver_all = false, ver_json = false;
    long ver_order = 0, ver_edges = 0;
    auto* ver = app.add_subcommand("verify", "run named consistency checks");
    ver->add_option("--check", ver_check, "single check name");
    ver->add_flag("--all", ver_all, "run every registered check");
    ver->add_option("--order", ver_order, "series size for order-parametric checks")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--edges", ver_edges, "enumeration size for edge-parametric checks")
        ->check(CLI::NonNegativeNumber);
    ver->add_flag("--json", ver_json, "emit JSON instead of text");

    // asym
    std::string asym_family, asym_out;
    long asym_nmax = 0;
    auto* asy = app.add_subcommand("asym", "coefficient growth table as CSV");
    asy->add_option("--family", asym_family, "quartic or general")->required();
    asy->add_option("--n-max", asym_nmax, "number of rows")->required()
        ->check(CLI::PositiveNumber);
    asy->add_option("--out", asym_out, "output path (default stdout)");

    // trees
    std::string tree_family, tree_out;
    long tree_max = 0;
    auto* tre = app.add_subcommand("trees", "balanced tree counts as CSV");
    tre->add_option("--family", tree_family, "quartic or general")->required();
    tre->add_option("--max-size", tree_max, "largest tree size row");
    tre->add_option("--out", tree_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    eo::Limits limits{max_edges, max_order, precision_bits};

    try {
        if (seq->parsed()) {
            if (seq_count > limits.max_order) {
                std::cerr << "error: --count exceeds the order ceiling (" << limits.max_order
                          << ")\n";
                return kExitCeiling;
            }
            eo::Family f = parse_family(seq_family);
            eo::USeries g = eo::gf_main(f, seq_count);
            std::vector<std::string> vals;
            for (long n = 1; n <= seq_count; ++n) {
                eo::Rational c = g.coeff(n);
                if (!c.is_integer()) throw std::logic_error("non-integral sequence term");
                vals.push_back(c.numerator().to_string());
            }
            if (seq_json) {
                eo::ordered_json j;
                j["family"] = seq_family;
                j["values"] = vals;
                std::cout << j.dump(2) << "\n";
            } else if (!vals.empty()) {
                for (size_t i = 0; i < vals.size(); ++i)
                    std::cout << vals[i] << (i + 1 < vals.size() ? " " : "\n");
            }
            return kExitOk;
        }

        if (slv->parsed()) {
            if (sys_order > limits.max_order) {
                std::cerr << "error: --order exceeds the order ceiling (" << limits.max_order
                          << ")\n";
                return kExitCeiling;
            }
            eo::SystemKind kind = parse_system(sys_name);
            eo::FESystem sys = eo::FESystem::solve(kind, sys_order, sys_window);
            return deliver(sys_out, triple_to_json(sys).dump(2) + "\n");
        }

        if (enu->parsed()) {
            if (enum_edges > limits.max_edges) {
                std::cerr << "error: --edges exceeds the edge ceiling (" << limits.max_edges
                          << ")\n";
                return kExitCeiling;
            }
            eo::EnumOptions opt;
            opt.allowed_degrees = enum_degrees;
            opt.planar_only = !enum_all_genus;
            std::ostringstream os;
            eo::enumerate_rooted_maps(enum_edges,
                                      [&](const eo::CombMap& m) { os << eo::write_map(m) << "\n"; },
                                      opt);
            return deliver(enum_out, os.str());
        }

        if (ver->parsed()) {
            if (ver_all == !ver_check.empty()) {
                std::cerr << "error: pass exactly one of --check NAME or --all\n";
                return kExitUsage;
            }
            if (!ver_check.empty() && !eo::check_exists(ver_check)) {
                std::cerr << "error: unknown check '" << ver_check << "'\n";
                return kExitUsage;
            }
            eo::CheckParams params{limits, ver_order, ver_edges};
            std::vector<eo::CheckReport> reports;
            if (ver_all)
                reports = eo::run_all_checks(params);
            else
                reports.push_back(eo::run_check(ver_check, params));
            bool all_pass = true;
            if (ver_json) {
                eo::ordered_json arr = eo::ordered_json::array();
                for (const auto& rep : reports) {
                    eo::ordered_json j;
                    j["name"] = rep.name;
                    j["status"] = rep.status;
                    j["detail"] = rep.detail;
                    arr.push_back(j);
                    all_pass = all_pass && rep.status == "pass";
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& rep : reports) {
                    std::cout << rep.name << ": " << rep.status;
                    if (!rep.detail.empty()) std::cout << " (" << rep.detail << ")";
                    std::cout << "\n";
                    all_pass = all_pass && rep.status == "pass";
                }
            }
            return all_pass ? kExitOk : kExitFailure;
        }

        if (asy->parsed()) {
            if (asym_nmax > 2000) {
                std::cerr << "error: --n-max exceeds the growth table ceiling (2000)\n";
                return kExitCeiling;
            }
            eo::Family f = parse_family(asym_family);
            return deliver(asym_out, eo::growth_csv(f, asym_nmax, limits.precision_bits));
        }

        if (tre->parsed()) {
            eo::Family f = parse_family(tree_family);
            long bound = f == eo::Family::Quartic ? 4 : 5;
            if (tree_max == 0) tree_max = bound;
            if (tree_max > bound) {
                std::cerr << "error: --max-size exceeds the tree enumeration ceiling (" << bound
                          << ")\n";
                return kExitCeiling;
            }
            std::ostringstream os;
            os << "n,primitive,marked_u1,marked_u2\n";
            for (long n = 2; n <= tree_max; ++n) {
                eo::Rational m1 = eo::marked_tree_sum(f, n, eo::Rational(1));
                eo::Rational m2 = eo::marked_tree_sum(f, n, eo::Rational(2));
                if (!m1.is_integer() || !m2.is_integer())
                    throw std::logic_error("non-integral marked tree sum");
                os << n << "," << eo::count_primitive_trees(f, n).to_string() << ","
                   << m1.numerator().to_string() << "," << m2.numerator().to_string() << "\n";
            }
            return deliver(tree_out, os.str());
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    return kExitUsage;
}
