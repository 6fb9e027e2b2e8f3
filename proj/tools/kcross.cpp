// Command-line front end: apply the bijections with step traces, run the
// identity verifiers over (n,k) grids, enumerate avoidance classes, and
// render diagrams. Exit codes: 0 success / identity holds, 1 identity
// mismatch or membership failure, 2 usage or validation error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcross/json_io.hpp"
#include "kcross/render.hpp"
#include "kcross/selftest.hpp"

namespace {

using kcross::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw kcross::validation_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_input(const std::string& path) { return kcross::parse_json(read_input(path)); }

int default_jobs() {
    if (const char* env = std::getenv("KCROSS_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string csv_poly(const kcross::Polynomial& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ";";
        out += c.to_decimal();
    }
    return out.empty() ? "0" : out;
}

void print_report(const kcross::IdentityReport& r, const std::string& format) {
    if (format == "csv") {
        std::cout << r.n << "," << (r.k >= 0 ? std::to_string(r.k) : "") << ","
                  << (r.equal ? "true" : "false") << ","
                  << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "") << ",\""
                  << csv_poly(r.lhs) << "\",\"" << csv_poly(r.rhs) << "\"\n";
    } else if (format == "ascii") {
        std::cout << r.identity << " n=" << r.n;
        if (r.k >= 0) std::cout << " k=" << r.k;
        if (r.equal) {
            std::cout << ": equal  " << r.lhs.to_string() << "\n";
        } else {
            std::cout << ": MISMATCH at t^"
                      << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "?")
                      << "\n  lhs = " << r.lhs.to_string()
                      << "\n  rhs = " << r.rhs.to_string() << "\n";
        }
    } else {
        std::cout << kcross::to_json(r).dump() << "\n";
    }
}

struct VerifyGridOptions {
    int n = 0, k = 2, nmax = 0, kmax = 0;
    std::string format = "json";
};

// Runs the verifier over a single (n,k) or a grid; returns false on any
// mismatch. Grids print a JSON array in json mode and one row per case
// in csv/ascii mode.
bool run_verify_grid(const VerifyGridOptions& opt, bool has_k,
                     const std::function<kcross::IdentityReport(int, int)>& verify) {
    std::vector<kcross::IdentityReport> reports;
    if (opt.nmax > 0) {
        int klo = has_k ? 2 : -1, khi = has_k ? std::max(opt.kmax, 2) : -1;
        for (int n = 1; n <= opt.nmax; ++n)
            for (int k = klo; k <= khi; ++k) reports.push_back(verify(n, k));
    } else {
        reports.push_back(verify(opt.n, opt.k));
    }
    bool all_equal = true;
    if (opt.format == "csv") std::cout << "n,k,equal,mismatch,lhs,rhs\n";
    json arr = json::array();
    for (const auto& r : reports) {
        all_equal = all_equal && r.equal;
        if (opt.format == "json" && opt.nmax > 0)
            arr.push_back(kcross::to_json(r));
        else
            print_report(r, opt.format);
    }
    if (opt.format == "json" && opt.nmax > 0) std::cout << arr.dump() << "\n";
    return all_equal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of k-noncrossing and enhanced k-noncrossing "
                 "set partitions"};
    app.require_subcommand(1);
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker count for sharded enumeration")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check the counting identities");
    verify->require_subcommand(1);
    auto grid = std::make_shared<VerifyGridOptions>();

    auto add_verify = [&](const std::string& name, const std::string& help, bool has_k,
                          std::function<kcross::IdentityReport(int, int)> fn) {
        auto* cmd = verify->add_subcommand(name, help);
        cmd->add_option("--n", grid->n, "single size parameter");
        if (has_k) cmd->add_option("--k", grid->k, "crossing order")->check(CLI::Range(2, 64));
        cmd->add_option("--nmax", grid->nmax, "run the whole grid 1..nmax");
        if (has_k) cmd->add_option("--kmax", grid->kmax, "grid upper bound for k");
        cmd->add_option("--format", grid->format, "json|csv|ascii")
            ->check(CLI::IsMember({"json", "csv", "ascii"}));
        cmd->callback([&, has_k, fn] {
            action = [&, has_k, fn] { return run_verify_grid(*grid, has_k, fn) ? 0 : 1; };
        });
    };

    add_verify("euler", "NC_{n+1}(t) = t sum C(n,i) NW_i(t)", true,
               [&](int n, int k) { return kcross::verify_euler(n, k, jobs); });
    add_verify("gamma", "gamma expansion of the Narayana polynomials", false,
               [](int n, int) { return kcross::verify_gamma(n); });
    add_verify("stirling", "degenerate case: the Stirling identity", false,
               [](int n, int) { return kcross::verify_stirling(n); });
    add_verify("donaghey", "C_{n+1} = sum C(n,i) M_i", false,
               [](int n, int) { return kcross::verify_donaghey(n); });

    {
        auto* gap = verify->add_subcommand("nesting-gap",
                                           "first (n,k) where enhanced nonnesting "
                                           "classes break the transform");
        auto nmax = std::make_shared<int>(4);
        auto format = std::make_shared<std::string>("json");
        gap->add_option("--nmax", *nmax, "scan 1..nmax");
        gap->add_option("--format", *format, "json|ascii")
            ->check(CLI::IsMember({"json", "ascii"}));
        gap->callback([&, nmax, format] {
            action = [&, nmax, format] {
                kcross::NestingGapResult r = kcross::search_nesting_counterexample(*nmax);
                if (*format == "ascii") {
                    if (r.witness)
                        print_report(*r.witness, "ascii");
                    else
                        std::cout << "no witness up to nmax=" << r.scanned_nmax << "\n";
                    std::cout << "t=1 totals agree everywhere: "
                              << (r.t1_agree_everywhere ? "yes" : "NO") << "\n";
                } else {
                    json j{{"scanned_nmax", r.scanned_nmax},
                           {"t1_agree", r.t1_agree_everywhere}};
                    j["witness"] = r.witness ? kcross::to_json(*r.witness) : json(nullptr);
                    std::cout << j.dump() << "\n";
                }
                return 0;
            };
        });
    }

    // ---- phi / phi-inv / psi / psi-inv ----
    auto input = std::make_shared<std::string>("-");
    auto kparam = std::make_shared<int>(2);
    auto trace = std::make_shared<bool>(false);
    auto format = std::make_shared<std::string>("json");

    auto add_bijection = [&](const std::string& name, const std::string& help, bool phi_dir) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--k", *kparam, "crossing order")->required()->check(
            CLI::Range(2, 64));
        cmd->add_flag("--trace", *trace, "emit one JSON line per rewrite step");
        cmd->add_option("--input", *input, "partition JSON file, - for stdin");
        cmd->add_option("--format", *format, "json|ascii")
            ->check(CLI::IsMember({"json", "ascii"}));
        cmd->callback([&, phi_dir] {
            action = [&, phi_dir] {
                kcross::SetPartition p = kcross::partition_from_json(parse_input(*input));
                kcross::BijectionResult r =
                    phi_dir ? kcross::phi(p, *kparam) : kcross::phi_inv(p, *kparam);
                if (*trace)
                    for (const auto& step : r.trace)
                        std::cout << kcross::to_json(step).dump() << "\n";
                if (*format == "ascii")
                    std::cout << kcross::render_arcs(r.partition);
                else
                    std::cout << kcross::to_json(r.partition).dump() << "\n";
                return 0;
            };
        });
    };
    add_bijection("phi", "map a BNW partition to its k-noncrossing image", true);
    add_bijection("phi-inv", "map a k-noncrossing partition back to BNW", false);

    {
        auto* cmd = app.add_subcommand("psi", "strip noncrossing blocks to a partial "
                                              "matching pair");
        cmd->add_option("--input", *input, "partition JSON file, - for stdin");
        cmd->callback([&] {
            action = [&] {
                kcross::SetPartition p = kcross::partition_from_json(parse_input(*input));
                std::cout << kcross::to_json(kcross::psi(p)).dump() << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("psi-inv", "grow a matching pair back into a "
                                                  "noncrossing partition");
        cmd->add_option("--input", *input, "pair JSON file, - for stdin");
        cmd->callback([&] {
            action = [&] {
                kcross::MatchingPair pair =
                    kcross::matching_pair_from_json(parse_input(*input));
                std::cout << kcross::to_json(kcross::psi_inv(pair)).dump() << "\n";
                return 0;
            };
        });
    }

    // ---- fill ----
    auto* fill = app.add_subcommand("fill", "staircase 01-filling encodings");
    fill->require_subcommand(1);
    auto add_fill = [&](const std::string& name, const std::string& help,
                        std::function<json(const json&)> fn) {
        auto* cmd = fill->add_subcommand(name, help);
        cmd->add_option("--input", *input, "JSON file, - for stdin");
        cmd->callback([&, fn] {
            action = [&, fn] {
                std::cout << fn(parse_input(*input)).dump() << "\n";
                return 0;
            };
        });
    };
    add_fill("map-c", "partition of [n+1] to a filling of order n", [](const json& j) {
        return kcross::to_json(kcross::map_C(kcross::partition_from_json(j)));
    });
    add_fill("inv-c", "filling of order n to a partition of [n+1]", [](const json& j) {
        return kcross::to_json(kcross::inv_C(kcross::filling_from_json(j)));
    });
    add_fill("map-e", "partition of [n] to a filling of order n (loops kept)",
             [](const json& j) {
                 return kcross::to_json(kcross::map_E(kcross::partition_from_json(j)));
             });
    add_fill("inv-e", "filling of order n to a partition of [n]", [](const json& j) {
        return kcross::to_json(kcross::inv_E(kcross::filling_from_json(j)));
    });
    add_fill("map-f", "split a filling into (composition, hook-covered filling)",
             [](const json& j) {
                 auto [comp, compressed] = kcross::map_f(kcross::filling_from_json(j));
                 return json{{"composition", kcross::to_json(comp)},
                             {"filling", kcross::to_json(compressed)}};
             });
    add_fill("inv-f", "re-expand a (composition, filling) pair", [](const json& j) {
        if (!j.is_object() || !j.contains("composition") || !j.contains("filling"))
            throw kcross::validation_error(
                "inv-f: expected {\"composition\":[...],\"filling\":{...}}");
        return kcross::to_json(
            kcross::inv_f(kcross::composition_from_json(j["composition"]),
                          kcross::filling_from_json(j["filling"])));
    });

    // ---- enumerate ----
    {
        auto* cmd = app.add_subcommand("enumerate", "class polynomial of an avoidance "
                                                    "class, or its members");
        auto n = std::make_shared<int>(0);
        auto cls = std::make_shared<std::string>("nc");
        auto list = std::make_shared<bool>(false);
        auto big = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "ground-set size")->required()->check(
            CLI::Range(0, 12));
        cmd->add_option("--k", *kparam, "crossing order")->check(CLI::Range(2, 64));
        cmd->add_option("--class", *cls, "nc|nw|bnw|nonnest-enh")
            ->check(CLI::IsMember({"nc", "nw", "bnw", "nonnest-enh"}));
        cmd->add_flag("--list", *list, "stream the member partitions as JSON lines");
        cmd->add_flag("--big", *big, "lift the desk-scale ceiling from 10 to 12");
        cmd->callback([&, n, cls, list, big] {
            action = [&, n, cls, list, big] {
                if (*n > (*big ? 12 : 10))
                    throw kcross::validation_error(
                        "enumerate: n > 10 needs --big (ceiling 12)");
                kcross::PartitionClass c = *cls == "nc"   ? kcross::PartitionClass::nc
                                           : *cls == "nw" ? kcross::PartitionClass::nw
                                           : *cls == "bnw"
                                               ? kcross::PartitionClass::bnw
                                               : kcross::PartitionClass::nonnest_enh;
                if (*list) {
                    kcross::Indexing conv = c == kcross::PartitionClass::bnw
                                                ? kcross::Indexing::zero_based
                                                : kcross::Indexing::one_based;
                    kcross::for_each_partition(*n, conv, [&](const kcross::SetPartition& p) {
                        if (kcross::in_class(p, *kparam, c))
                            std::cout << kcross::to_json(p).dump() << "\n";
                    });
                } else {
                    std::cout
                        << kcross::to_json(kcross::class_poly(*n, *kparam, c, jobs)).dump()
                        << "\n";
                }
                return 0;
            };
        });
    }

    // ---- motzkin ----
    auto* motzkin = app.add_subcommand("motzkin", "noncrossing partial matchings as "
                                                  "Motzkin paths");
    motzkin->require_subcommand(1);
    {
        auto* cmd = motzkin->add_subcommand("to-path", "matching to a U/D/H word");
        cmd->add_option("--input", *input, "partition JSON file, - for stdin");
        cmd->callback([&] {
            action = [&] {
                kcross::SetPartition p = kcross::partition_from_json(parse_input(*input));
                std::cout << json{{"path", kcross::matching_to_motzkin(p).steps}}.dump()
                          << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = motzkin->add_subcommand("to-matching", "U/D/H word to a matching");
        cmd->add_option("--input", *input, "path JSON file, - for stdin");
        cmd->callback([&] {
            action = [&] {
                json j = parse_input(*input);
                if (!j.is_object() || !j.contains("path") || !j["path"].is_string())
                    throw kcross::validation_error("to-matching: expected {\"path\":\"...\"}");
                kcross::MotzkinPath m{j["path"].get<std::string>()};
                std::cout << kcross::to_json(kcross::motzkin_to_matching(m)).dump() << "\n";
                return 0;
            };
        });
    }

    // ---- render ----
    {
        auto* cmd = app.add_subcommand("render", "draw an arc diagram or a filling as text");
        auto what = std::make_shared<std::string>("arcs");
        cmd->add_option("--what", *what, "arcs|filling")
            ->check(CLI::IsMember({"arcs", "filling"}));
        cmd->add_option("--format", *format, "ascii")->check(CLI::IsMember({"ascii"}));
        cmd->add_option("--input", *input, "JSON file, - for stdin");
        cmd->callback([&, what] {
            action = [&, what] {
                json j = parse_input(*input);
                if (*what == "arcs")
                    std::cout << kcross::render_arcs(kcross::partition_from_json(j));
                else
                    std::cout << kcross::render_filling(kcross::filling_from_json(j));
                return 0;
            };
        });
    }

    // ---- selftest ----
    {
        auto* cmd = app.add_subcommand("selftest", "run the exhaustive property suite");
        auto nmax = std::make_shared<int>(8);
        auto kmax = std::make_shared<int>(4);
        cmd->add_option("--nmax", *nmax, "ground-set ceiling")->check(CLI::Range(1, 10));
        cmd->add_option("--kmax", *kmax, "crossing-order ceiling")->check(CLI::Range(2, 8));
        cmd->callback([&, nmax, kmax] {
            action = [&, nmax, kmax] {
                kcross::SelfTestResult r = kcross::run_selftest(*nmax, *kmax, jobs);
                std::cout << r.report;
                return r.passed ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const kcross::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kcross::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const kcross::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
