// weylkit: exact type-A decomposition calculator and classification-table
// verifier.  All output is deterministic; dimensions print as decimal
// strings.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "weylkit/weylkit.hpp"

namespace wk = weylkit;
using wk::Int;

namespace {

// exit codes: 0 ok/pass, 1 verification failure, 2 usage, 3 guard
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in integer list '" + s + "'");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

// weights: comma-separated fundamental coefficients; partitions: "p:7,5,2"
wk::Partition parse_partition(const std::string& s) {
    std::string body = s;
    if (body.rfind("p:", 0) == 0) body = body.substr(2);
    return wk::Partition(parse_int_list(body));
}

wk::DominantWeight parse_weight(const std::string& s, Int rank) {
    auto v = parse_int_list(s);
    while (static_cast<Int>(v.size()) > rank && v.back() == 0) v.pop_back();
    if (static_cast<Int>(v.size()) != rank)
        throw CLI::ValidationError("weight '" + s + "' does not fit rank " + std::to_string(rank));
    return wk::DominantWeight(rank, std::move(v));
}

struct Output {
    bool json = false;
    void decomposition(const wk::Decomposition& d) const {
        if (json)
            std::cout << wk::decomposition_to_json(d).dump() << "\n";
        else
            std::cout << wk::decomposition_text(d);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact type-A representation combinatorics"};
    app.require_subcommand(1);

    std::string format = "text";
    Int guard = wk::kDefaultGuard;
    int jobs = 1;
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-entries", guard, "weight-table entry guard");
    app.add_option("--jobs", jobs, "worker threads for verify-tables");

    // --- dim ---
    Int rank = 1;
    std::string weight_s, a_s, b_s, mu_s, delta_s, lambda_s, gamma_s, nu_s, eps_s, registry_path;
    Int k = 0, l = 1, so_dim = 6;
    auto* dim = app.add_subcommand("dim", "dimension of an irreducible");
    dim->add_option("--rank", rank)->required();
    dim->add_option("--weight", weight_s)->required();

    auto* tensor = app.add_subcommand("tensor", "decompose a tensor product");
    tensor->add_option("--rank", rank)->required();
    tensor->add_option("--a", a_s)->required();
    tensor->add_option("--b", b_s)->required();

    auto* sym = app.add_subcommand("sym", "decompose a symmetric power");
    sym->add_option("--rank", rank)->required();
    sym->add_option("--k", k)->required();
    sym->add_option("--weight", weight_s)->required();

    auto* alt = app.add_subcommand("alt", "decompose an exterior power");
    alt->add_option("--rank", rank)->required();
    alt->add_option("--k", k)->required();
    alt->add_option("--weight", weight_s)->required();

    auto* square = app.add_subcommand("square", "split V(x)V into symmetric and alternating parts");
    square->add_option("--rank", rank)->required();
    square->add_option("--weight", weight_s)->required();

    auto* lrc = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient");
    lrc->add_option("--delta", delta_s)->required();
    lrc->add_option("--epsilon", eps_s)->required();
    lrc->add_option("--nu", nu_s)->required();

    auto* pieri = app.add_subcommand("pieri", "tensor with a one-row module");
    pieri->add_option("--rank", rank)->required();
    pieri->add_option("--k", k)->required();
    pieri->add_option("--a", a_s)->required();

    std::string end_s = "last";
    bool via_character = false;
    auto* levels = app.add_subcommand("levels", "parabolic level decomposition");
    levels->add_option("--rank", rank)->required();
    levels->add_option("--delta", delta_s)->required();
    levels->add_option("--end", end_s)->check(CLI::IsMember({"first", "last"}));
    levels->add_flag("--via-character", via_character, "use the graded character engine");

    auto* branch = app.add_subcommand("branch-so", "restrict a GL module to SO");
    branch->add_option("--gamma", gamma_s)->required();
    branch->add_option("--so-dim", so_dim)->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict V_Y(lambda) along X = A_{l+1} < SL(V(delta))");
    restrict_cmd->add_option("--l", l)->required();
    restrict_cmd->add_option("--delta", delta_s)->required();
    restrict_cmd->add_option("--lambda", lambda_s)->required();

    auto* mf = app.add_subcommand("mf-check", "multiplicity-freeness of a restriction");
    mf->add_option("--l", l)->required();
    mf->add_option("--delta", delta_s)->required();
    mf->add_option("--lambda", lambda_s)->required();

    auto* wm = app.add_subcommand("weight-mult", "weight multiplicity inside an irreducible");
    wm->add_option("--rank", rank)->required();
    wm->add_option("--lambda", lambda_s)->required();
    wm->add_option("--mu", mu_s)->required();

    Int l_max = 3, param_max = 3;
    std::vector<std::string> only_tables;
    auto* vt = app.add_subcommand("verify-tables", "re-verify the classification tables at desk scale");
    vt->add_option("--registry", registry_path, "external registry file (default: built-in)");
    vt->add_option("--l-max", l_max);
    vt->add_option("--param-max", param_max);
    vt->add_option("--tables", only_tables, "restrict to these table ids");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    Output out{format == "json"};
    try {
        if (dim->parsed()) {
            std::cout << wk::weyl_dim(parse_weight(weight_s, rank)).str() << "\n";
        } else if (tensor->parsed()) {
            out.decomposition(wk::tensor_decompose(parse_weight(a_s, rank), parse_weight(b_s, rank)));
        } else if (sym->parsed()) {
            out.decomposition(wk::sym_power(k, parse_weight(weight_s, rank), guard));
        } else if (alt->parsed()) {
            out.decomposition(wk::alt_power(k, parse_weight(weight_s, rank), guard));
        } else if (square->parsed()) {
            auto [s, a] = wk::square_decompose(parse_weight(weight_s, rank));
            if (out.json) {
                wk::ordered_json j;
                j["sym"] = wk::decomposition_to_json(s);
                j["alt"] = wk::decomposition_to_json(a);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "symmetric part:\n" << wk::decomposition_text(s);
                std::cout << "alternating part:\n" << wk::decomposition_text(a);
            }
        } else if (lrc->parsed()) {
            std::cout << wk::lr_coefficient(parse_partition(delta_s), parse_partition(eps_s), parse_partition(nu_s))
                      << "\n";
        } else if (pieri->parsed()) {
            out.decomposition(wk::pieri(k, parse_weight(a_s, rank)));
        } else if (levels->parsed()) {
            wk::ParabolicEnd end = end_s == "first" ? wk::ParabolicEnd::first : wk::ParabolicEnd::last;
            wk::LevelDecomposition ld;
            if (via_character || end == wk::ParabolicEnd::first)
                ld = wk::parabolic_levels(parse_weight(delta_s, rank), end, guard);
            else
                ld = wk::levels_closed_form(parse_weight(delta_s, rank));
            if (out.json) {
                std::cout << wk::levels_to_json(ld).dump() << "\n";
            } else {
                for (std::size_t i = 0; i < ld.levels.size(); ++i) {
                    std::cout << "level " << i << ":\n" << wk::decomposition_text(ld.levels[i]);
                }
            }
        } else if (branch->parsed()) {
            auto gamma = parse_partition(gamma_s);
            auto br = wk::gl_to_so_branching(gamma, so_dim);
            if (out.json) {
                wk::ordered_json j;
                j["so_dim"] = so_dim;
                wk::ordered_json arr = wk::ordered_json::array();
                for (auto& [xi, m] : br) {
                    wk::ordered_json s;
                    s["xi"] = xi.parts();
                    s["mult"] = m;
                    if (so_dim == 6) {
                        wk::SOWeight sw(xi, so_dim);
                        s["a3"] = wk::so6_to_a3(sw).coeffs;
                        s["dual_pair"] = wk::so6_is_dual_pair(sw);
                    }
                    arr.push_back(std::move(s));
                }
                j["summands"] = std::move(arr);
                std::cout << j.dump() << "\n";
            } else {
                for (auto& [xi, m] : br) {
                    std::cout << xi.to_string();
                    if (so_dim == 6) {
                        wk::SOWeight sw(xi, so_dim);
                        std::cout << " = A3 " << wk::so6_to_a3(sw).to_string()
                                  << (wk::so6_is_dual_pair(sw) ? " (+ dual)" : "");
                    }
                    if (m != 1) std::cout << " x" << m;
                    std::cout << "\n";
                }
            }
        } else if (restrict_cmd->parsed()) {
            auto delta = parse_weight(delta_s, l + 1);
            auto e = wk::build_embedding(l, delta, guard);
            auto lambda = parse_weight(lambda_s, e.y_rank());
            out.decomposition(wk::restrict_module(e, lambda, guard));
        } else if (mf->parsed()) {
            auto delta = parse_weight(delta_s, l + 1);
            auto e = wk::build_embedding(l, delta, guard);
            auto lambda = parse_weight(lambda_s, e.y_rank());
            auto rep = wk::is_multiplicity_free(e, lambda, guard);
            if (out.json) {
                wk::ordered_json j;
                j["mf"] = rep.is_mf;
                j["max_multiplicity"] = rep.max_multiplicity;
                j["decomposition"] = wk::decomposition_to_json(rep.decomposition);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (rep.is_mf ? "MF" : "not MF") << ", " << rep.decomposition.distinct_summands()
                          << " distinct summand(s), max multiplicity " << rep.max_multiplicity << "\n";
                std::cout << wk::decomposition_text(rep.decomposition);
            }
            if (!rep.is_mf) return kExitFail;
        } else if (wm->parsed()) {
            auto lambda = parse_weight(lambda_s, rank);
            auto mu = parse_int_list(mu_s);
            std::cout << wk::weight_multiplicity(lambda, wk::WeightVector(rank, mu)) << "\n";
        } else if (vt->parsed()) {
            std::string text;
            if (registry_path.empty()) {
                text = wk::builtin_registry_text();
            } else {
                std::ifstream in(registry_path);
                if (!in) throw std::runtime_error("cannot open registry file " + registry_path);
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            auto entries = wk::parse_registry(text);
            wk::VerifyBounds bounds;
            bounds.l_max = l_max;
            bounds.param_max = param_max;
            bounds.guard = guard;
            bounds.jobs = jobs;
            for (auto& t : only_tables) bounds.tables.insert(t);
            auto rep = wk::verify_tables(entries, bounds);
            std::cout << wk::report_text(rep);
            std::cerr << "elapsed " << rep.wall_ms << " ms\n";
            if (!rep.pass) return kExitFail;
        }
    } catch (const wk::guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wk::rank_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
