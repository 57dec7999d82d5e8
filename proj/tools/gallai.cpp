// gallai: build, verify and analyze edge colorings of complete graphs that
// avoid rainbow triangles and monochromatic star unions.
//
// Exit codes: 0 property holds / value computed, 1 property refuted (with
// certificate), 2 input error, 3 inconclusive (budget).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/coloring.hpp"
#include "gallai/constructions.hpp"
#include "gallai/formulas.hpp"
#include "gallai/io.hpp"
#include "gallai/partition.hpp"
#include "gallai/search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

gallai::ColoredComplete load_coloring(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw gallai::parse_error("cannot open " + path);
    return gallai::parse_coloring(is);
}

json embedding_json(const gallai::StarUnionEmbedding& e) {
    return json{{"color", e.color},
                {"center_a", e.center_a},
                {"center_b", e.center_b},
                {"leaves_a", e.leaves_a},
                {"leaves_b", e.leaves_b}};
}

json formula_json(const gallai::FormulaResult& r) {
    json j;
    j["kind"] = r.kind == gallai::FormulaResult::Kind::exact ? "exact" : "bounds";
    if (r.kind == gallai::FormulaResult::Kind::exact)
        j["value"] = r.value();
    else
        j["bounds"] = {r.lower, r.upper};
    j["guards_satisfied"] = r.guards_satisfied();
    j["guard_violations"] = r.guard_violations;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void print_report(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
                  << "\n";
}

struct PatternOpt {
    int n = 1;
    int m = 1;
};

int resolve_threads(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("GALLAI_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Gallai-Ramsey star-union toolkit"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a lower-bound witness coloring");
    std::string subkind;
    int c_n = 0, c_m = 1, c_k = 3;
    std::vector<int> c_sizes;
    int c_inside = 1, c_a = 2, c_b = 3;
    std::string out_path;
    construct->add_option("kind", subkind, "small-m | equal | general | pentagon")->required();
    construct->add_option("--n", c_n);
    construct->add_option("--m", c_m);
    construct->add_option("--k", c_k);
    construct->add_option("--sizes", c_sizes, "pentagon part sizes (5 values)");
    construct->add_option("--inside", c_inside, "pentagon inside color");
    construct->add_option("--cycle-color", c_a, "pentagon cycle color");
    construct->add_option("--diagonal-color", c_b, "pentagon diagonal color");
    construct->add_option("--out", out_path, "output file (default: stdout)");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a coloring file against a pattern");
    std::string verify_path;
    PatternOpt v_pat;
    bool verify_json = false;
    verify->add_option("path", verify_path)->required();
    verify->add_option("--n", v_pat.n)->required();
    verify->add_option("--m", v_pat.m)->required();
    verify->add_flag("--json", verify_json);

    // partition ------------------------------------------------------------
    auto* partition = app.add_subcommand("partition", "extract a Gallai partition");
    std::string part_path;
    bool part_json = false;
    partition->add_option("path", part_path)->required();
    partition->add_flag("--json", part_json);

    // formula --------------------------------------------------------------
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form result");
    std::string formula_name;
    int f_n = 1, f_m = 1, f_k = 3;
    bool formula_json_flag = false;
    formula->add_option("name", formula_name,
                        "ramsey-union | single-star | gr-small-m | gr-equal | gr-general")
        ->required();
    formula->add_option("--n", f_n);
    formula->add_option("--m", f_m);
    formula->add_option("--k", f_k);
    formula->add_flag("--json", formula_json_flag);

    // search ---------------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive symmetry-pruned search");
    std::string search_verb;  // decide | threshold
    int s_k = 2, s_N = 2, s_max = 6;
    std::string s_pattern = "1,1";
    std::string s_mode = "gallai";
    std::uint64_t s_budget = 50'000'000;
    std::optional<int> s_threads;
    std::string s_checkpoint;
    bool search_json = false;
    search->add_option("verb", search_verb, "decide | threshold")->required();
    search->add_option("--k", s_k);
    search->add_option("--pattern", s_pattern, "n,m");
    search->add_option("--mode", s_mode, "gallai | ramsey");
    search->add_option("--N", s_N, "host order (decide)");
    search->add_option("--max", s_max, "largest order to try (threshold)");
    search->add_option("--budget", s_budget, "node budget");
    search->add_option("--threads", s_threads, "worker count (default: GALLAI_THREADS or 1)");
    search->add_option("--checkpoint", s_checkpoint, "checkpoint file (decide only)");
    search->add_flag("--json", search_json);

    // stability ------------------------------------------------------------
    auto* stability = app.add_subcommand("stability", "five-part stability report");
    std::string stab_path;
    int st_n = 22, st_r = 4;
    bool stab_json = false;
    stability->add_option("path", stab_path)->required();
    stability->add_option("--n", st_n)->required();
    stability->add_option("--r", st_r)->required();
    stability->add_flag("--json", stab_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (construct->parsed()) {
        gallai::ColoredComplete g(1, 1);
        long claimed = 0;
        bool verified = true;
        if (subkind == "pentagon") {
            if (c_sizes.size() != 5)
                throw std::invalid_argument("pentagon needs --sizes with 5 values");
            std::array<int, 5> sz{c_sizes[0], c_sizes[1], c_sizes[2], c_sizes[3], c_sizes[4]};
            g = gallai::pentagon_blowup(sz, c_inside, c_a, c_b);
        } else {
            gallai::Witness w = [&] {
                if (subkind == "small-m") return gallai::build_small_m_lower(c_n, c_m, c_k);
                if (subkind == "equal") return gallai::build_equal_lower(c_n, c_k);
                if (subkind == "general") return gallai::build_general_lower(c_n, c_m, c_k);
                throw std::invalid_argument("unknown construct kind: " + subkind);
            }();
            g = w.coloring;
            claimed = w.claimed_bound;
            verified = w.verified == gallai::VerifyStatus::pass;
        }
        const std::string text = gallai::emit_coloring(g);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot write " + out_path);
            os << text;
        }
        if (!verified) {
            std::cerr << "construct: self-verification FAILED (claimed bound " << claimed
                      << ")\n";
            return kExitRefuted;
        }
        std::cerr << "construct: order " << g.order() << ", certifies bound " << claimed
                  << ", self-verification passed\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const auto g = load_coloring(verify_path);
        const gallai::StarUnionPattern pat(v_pat.n, v_pat.m);
        const auto rainbow = gallai::find_rainbow_triangle(g);
        const auto star = gallai::find_mono_star_union(g, pat);
        json j{{"order", g.order()},
               {"colors", g.num_colors()},
               {"pattern", {pat.n, pat.m}},
               {"rainbow_free", !rainbow.has_value()},
               {"pattern_free", !star.has_value()}};
        if (rainbow) j["rainbow_triangle"] = {(*rainbow)[0], (*rainbow)[1], (*rainbow)[2]};
        if (star) j["embedding"] = embedding_json(*star);
        print_report(j, verify_json);
        return (!rainbow && !star) ? kExitOk : kExitRefuted;
    }

    if (partition->parsed()) {
        const auto g = load_coloring(part_path);
        const auto p = gallai::find_gallai_partition(g);
        if (!p) {
            json j{{"found", false}, {"reason", "rainbow triangle present"}};
            print_report(j, part_json);
            return kExitRefuted;
        }
        const auto reduced = gallai::reduced_graph(g, *p);
        json parts = json::array();
        for (const auto& part : p->parts) parts.push_back(part);
        json j{{"found", true},
               {"num_parts", p->num_parts()},
               {"palette", p->palette},
               {"parts", parts},
               {"reduced", gallai::emit_coloring(reduced)}};
        print_report(j, part_json);
        return kExitOk;
    }

    if (formula->parsed()) {
        gallai::FormulaResult r;
        if (formula_name == "ramsey-union")
            r = gallai::ramsey_union_stars(f_n, f_m);
        else if (formula_name == "single-star")
            r = gallai::gr_single_star(f_k, f_m);
        else if (formula_name == "gr-small-m")
            r = gallai::gr_small_m(f_k, f_n, f_m);
        else if (formula_name == "gr-equal")
            r = gallai::gr_equal(f_k, f_n);
        else if (formula_name == "gr-general")
            r = gallai::gr_general_bounds(f_k, f_n, f_m);
        else
            throw std::invalid_argument("unknown formula: " + formula_name);
        print_report(formula_json(r), formula_json_flag);
        return kExitOk;
    }

    if (search->parsed()) {
        int pn = 1, pm = 1;
        if (std::sscanf(s_pattern.c_str(), "%d,%d", &pn, &pm) != 2)
            throw std::invalid_argument("--pattern expects n,m");
        const bool gallai_mode = [&] {
            if (s_mode == "gallai") return true;
            if (s_mode == "ramsey") return false;
            throw std::invalid_argument("--mode must be gallai or ramsey");
        }();
        gallai::SearchOptions opts;
        opts.node_budget = s_budget;
        opts.threads = resolve_threads(s_threads);
        opts.checkpoint_path = s_checkpoint;
        const gallai::StarUnionPattern pat(pn, pm);
        try {
            if (search_verb == "decide") {
                const auto out =
                    gallai::decide({s_k, pat, gallai_mode, s_N}, opts);
                json j{{"verdict", out.verdict == gallai::Verdict::avoider_found
                                       ? "avoider_found"
                                       : "exhausted"},
                       {"nodes_explored", out.nodes_explored}};
                if (out.witness) j["witness"] = gallai::emit_coloring(*out.witness);
                print_report(j, search_json);
                return kExitOk;
            }
            if (search_verb == "threshold") {
                const auto t =
                    gallai::compute_threshold(s_k, pat, gallai_mode, s_max, opts);
                json j;
                if (t)
                    j["threshold"] = *t;
                else
                    j["threshold"] = nullptr;
                print_report(j, search_json);
                return kExitOk;
            }
            throw std::invalid_argument("search verb must be decide or threshold");
        } catch (const gallai::budget_exceeded& e) {
            std::cerr << "inconclusive: " << e.what() << "\n";
            return kExitInconclusive;
        }
    }

    if (stability->parsed()) {
        const auto g = load_coloring(stab_path);
        const auto rep = gallai::check_star_stability(g, st_n, st_r);
        json j{{"n", rep.n},
               {"r", rep.r},
               {"holds_hypothesis", rep.holds_hypothesis},
               {"num_parts", rep.num_parts},
               {"min_part_size", rep.min_part_size},
               {"min_between_degree_per_color", rep.min_between_degree_per_color},
               {"conclusion_holds", rep.conclusion_holds},
               {"implication_ok", rep.implication_ok},
               {"warnings", rep.warnings}};
        print_report(j, stab_json);
        return rep.implication_ok ? kExitOk : kExitRefuted;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gallai::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
