// Command-line surface for the cayley library: counting queries, generating
// functions, enumeration dumps, bijective moves, Lagrange inversion routes,
// and the brute-force verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cayley/bijections.hpp"
#include "cayley/cactus.hpp"
#include "cayley/formulas.hpp"
#include "cayley/lagrange.hpp"
#include "cayley/verify.hpp"

using nlohmann::json;
using namespace cayley;

namespace {

bool g_pretty = false;

void emit(const json& j) {
    if (g_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// Keyed list "k1,k2,...:v;k1,k2,...:v" -> pairs of (key tuple, value).
std::vector<std::pair<std::vector<int>, int>> parse_keyed(const std::string& text) {
    std::vector<std::pair<std::vector<int>, int>> out;
    std::stringstream ss(text);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected key:value in " + entry);
        out.emplace_back(parse_ints(entry.substr(0, colon)),
                         std::stoi(entry.substr(colon + 1)));
    }
    return out;
}

json read_input(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

EnumBounds bounds_from_env() {
    EnumBounds bounds;
    auto read = [](const char* name, int& slot) {
        if (const char* value = std::getenv(name)) slot = std::atoi(value);
    };
    read("CAYLEY_MAX_TREE_VERTICES", bounds.max_tree_vertices);
    read("CAYLEY_MAX_SKELETON_TYPES", bounds.max_skeleton_types);
    read("CAYLEY_MAX_PLANE_VERTICES", bounds.max_plane_vertices);
    read("CAYLEY_MAX_CACTUS_SIZE", bounds.max_cactus_size);
    return bounds;
}

json skeleton_to_json(const CayleySkeleton& skel) {
    json parents = json::array();
    for (const auto& [s, t] : skel.parent) parents.push_back({s, t});
    return {{"d", skel.d}, {"root", skel.root}, {"parents", parents}};
}

json plane_tree_to_json(const PlaneTree& tree) {
    json children = json::array();
    for (const auto& c : tree.children) children.push_back(plane_tree_to_json(c));
    return {{"children", children}};
}

json report_to_json(const VerificationReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(
            {{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"suite", report.suite},
            {"cases", report.cases},
            {"failures", failures},
            {"seconds", report.seconds}};
}

FunctionalSystem system_from_json(const json& j) {
    FunctionalSystem system;
    system.d = j.at("d").get<int>();
    system.order = j.at("order").get<int>();
    for (const auto& g : j.at("G")) system.G.push_back(series_from_json(g));
    return system;
}

int run_count(const std::string& stat, const std::string& profile_str, int root,
              const std::string& gamma_str, const std::string& m_str,
              const std::string& arcs_str, const std::string& counts_str,
              const std::string& classes_json) {
    Int result;
    if (stat == "unitype-degree") {
        result = count_unitype_degree(parse_ints(gamma_str));
    } else if (stat == "plane-trees") {
        result = count_plane_trees(parse_ints(counts_str));
    } else if (stat == "edge-types" || stat == "injective-edge-types") {
        Profile profile(parse_ints(profile_str));
        EdgeTypeMatrix m;
        for (const auto& [key, v] : parse_keyed(m_str)) {
            if (key.size() != 2) throw std::invalid_argument("m keys are s,t pairs");
            m.m[{key[0], key[1]}] = v;
        }
        result = stat == "edge-types" ? count_by_edge_types(m, profile, root)
                                      : count_injective_by_edge_types(m, profile, root);
    } else if (stat == "embedded" || stat == "injective-embedded") {
        Profile profile(parse_ints(profile_str));
        EmbeddingDigraph digraph;
        std::stringstream ss(arcs_str);
        std::string arc;
        while (std::getline(ss, arc, ';')) {
            auto pair = parse_ints(arc);
            if (pair.size() != 2) throw std::invalid_argument("arcs are s,t pairs");
            digraph.edges.insert({pair[0], pair[1]});
        }
        result = stat == "embedded" ? count_embedded(digraph, profile, root)
                                    : count_injective_embedded(digraph, profile, root);
    } else if (stat == "indegree") {
        Profile profile(parse_ints(profile_str));
        IndegreeVector gamma;
        for (const auto& [key, v] : parse_keyed(gamma_str)) {
            if (key.size() != 3)
                throw std::invalid_argument("gamma keys are s,t,i triples");
            gamma.gamma[{key[0], VertexId{key[1], key[2]}}] = v;
        }
        result = count_by_indegree_vector(gamma, profile, root);
    } else if (stat == "degree-classes") {
        DegreeClassCounts N;
        for (const auto& entry : json::parse(classes_json))
            N.N[{entry.at("t").get<int>(), entry.at("c").get<std::vector<int>>()}] =
                entry.at("count").get<int>();
        result = count_by_degree_classes(N, root);
    } else if (stat == "complete-types" || stat == "complete-special") {
        CompleteTypeCounts N;
        for (const auto& entry : json::parse(classes_json))
            N.N[{entry.at("t").get<int>(), entry.at("u").get<int>(),
                 entry.at("c").get<std::vector<int>>()}] = entry.at("count").get<int>();
        result = stat == "complete-types" ? count_by_complete_types(N, root)
                                          : count_complete_special(N);
    } else {
        throw std::invalid_argument("unknown stat: " + stat);
    }
    std::cout << result.str() << "\n";
    return 0;
}

int run_gf(const std::string& kind, const std::string& profile_str, int root) {
    Profile profile(parse_ints(profile_str));
    Polynomial out;
    if (kind == "multitype")
        out = gf_multitype(profile, root);
    else if (kind == "forests")
        out = gf_forests(profile);
    else if (kind == "delta")
        out = delta_polynomial(profile, root);
    else if (kind == "delta-det")
        out = delta_determinant(profile, root);
    else
        throw std::invalid_argument("unknown gf kind: " + kind);
    emit(to_json(out));
    return 0;
}

int run_list(const std::string& what, const std::string& profile_str, int root,
             int d, int n) {
    EnumBounds bounds = bounds_from_env();
    if (what == "trees") {
        Profile profile(parse_ints(profile_str));
        enumerate_trees(profile, root,
                        [&](const RootedMultitypeTree& t) { emit(to_json(t)); }, bounds);
    } else if (what == "forests") {
        Profile profile(parse_ints(profile_str));
        enumerate_forests(profile, [&](const RootedForest& f) { emit(to_json(f)); },
                          bounds);
    } else if (what == "skeletons") {
        enumerate_skeletons(d, root,
                            [&](const CayleySkeleton& s) { emit(skeleton_to_json(s)); },
                            bounds);
    } else if (what == "plane-trees") {
        enumerate_plane_trees(n, [&](const PlaneTree& t) { emit(plane_tree_to_json(t)); },
                              bounds);
    } else if (what == "cacti") {
        Profile profile(parse_ints(profile_str));
        enumerate_cacti(d, profile, [&](const Cactus& c) { emit(to_json(c)); }, bounds);
    } else {
        throw std::invalid_argument("unknown list target: " + what);
    }
    return 0;
}

int run_bijection(const std::string& move, const std::string& input, int s, int t,
                  int i, int j, int k, int r, bool verify) {
    json in = read_input(input);
    if (move == "phi-unitype") {
        MarkedUnitypeTree m{in.at("n").get<int>(), {}, in.at("pivot").get<int>(),
                            in.at("other").get<int>()};
        for (const auto& e : in.at("edges"))
            m.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        MarkedUnitypeTree out = phi_unitype(m, i, j);
        if (verify && !(phi_unitype(out, j, i) == m)) return 1;
        json edges = json::array();
        for (auto [a, b] : out.edges) edges.push_back({a, b});
        emit({{"n", out.n}, {"edges", edges}, {"pivot", out.pivot}, {"other", out.other}});
    } else if (move == "indegree") {
        MarkedTree m = marked_tree_from_json(in);
        MarkedTree out = classify_and_apply(m, s, t, i, j);
        if (verify && !(classify_and_apply(out, s, t, j, i) == m)) return 1;
        emit(to_json(out));
    } else if (move == "cactus-phi") {
        Cactus c = cactus_from_json(in);
        Cactus out = cactus_phi(c, s, j, k);
        if (verify && !(cactus_phi(out, s, k, j) == c)) return 1;
        emit(to_json(out));
    } else if (move == "cactus-psi") {
        Cactus c = cactus_from_json(in);
        Cactus out = cactus_psi(c, r, s);
        if (verify && !(cactus_psi(out, s, r) == c)) return 1;
        emit(to_json(out));
    } else {
        throw std::invalid_argument("unknown move: " + move);
    }
    return 0;
}

int run_lagrange(const std::string& route, const std::string& input,
                 const std::string& n_str, int root) {
    FunctionalSystem system = system_from_json(read_input(input));
    if (route == "solve") {
        for (const auto& f : solve_functional_system(system)) emit(to_json(f));
        return 0;
    }
    std::vector<int> n = parse_ints(n_str);
    Rat value;
    if (route == "tree-sum")
        value = tree_sum_coefficient(system, root, n, bounds_from_env());
    else if (route == "rhs")
        value = lagrange_rhs_coefficient(system, n);
    else if (route == "observable")
        value = observable_coefficient(system, n);
    else
        throw std::invalid_argument("unknown route: " + route);
    std::cout << value.str() << "\n";
    return 0;
}

int run_cacti(const std::string& action, int d, const std::string& profile_str,
              const std::string& gamma_str) {
    if (action == "count-total") {
        std::cout << count_cacti_total(Profile(parse_ints(profile_str)), d).str()
                  << "\n";
    } else if (action == "count-degree") {
        CactusDegreeVector gamma;
        for (const auto& [key, v] : parse_keyed(gamma_str)) {
            if (key.size() != 2) throw std::invalid_argument("gamma keys are t,i pairs");
            gamma.gamma[{key[0], key[1]}] = v;
        }
        std::cout << count_cacti_by_degree(gamma, d).str() << "\n";
    } else if (action == "list") {
        return run_list("cacti", profile_str, 1, d, 0);
    } else if (action == "verify") {
        VerifyOptions opt;
        opt.bounds = bounds_from_env();
        auto report = verify_cacti(opt);
        emit(report_to_json(report));
        return report.ok() ? 0 : 1;
    } else {
        throw std::invalid_argument("unknown action: " + action);
    }
    return 0;
}

int run_verify(const std::string& suite, int max_vertices, int max_d, unsigned seed) {
    VerifyOptions opt;
    opt.max_vertices = max_vertices;
    opt.max_d = max_d;
    opt.seed = seed;
    opt.bounds = bounds_from_env();
    bool ok = true;
    for (const auto& report : run_suites(suite, opt)) {
        emit(report_to_json(report));
        ok = ok && report.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multitype Cayley tree enumeration toolkit"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    std::string stat, profile_str, gamma_str, m_str, arcs_str, counts_str,
        classes_json, kind, what, move, input = "-", route, action,
        suite = "all";
    int root = 1, d = 2, n = 1, s = 1, t = 1, i = 1, j = 2, k = 2, r = 1;
    int max_vertices = 7, max_d = 3;
    unsigned seed = VerifyOptions{}.seed;
    bool check = false;

    auto* count = app.add_subcommand("count", "evaluate a counting formula");
    count->add_option("--stat", stat)->required();
    count->add_option("--profile", profile_str);
    count->add_option("--root", root);
    count->add_option("--gamma", gamma_str);
    count->add_option("--m", m_str);
    count->add_option("--arcs", arcs_str);
    count->add_option("--counts", counts_str);
    count->add_option("--classes", classes_json);
    count->add_option("--d", d);

    auto* gf = app.add_subcommand("gf", "expand a generating function");
    gf->add_option("--kind", kind)->required();
    gf->add_option("--profile", profile_str)->required();
    gf->add_option("--root", root);

    auto* list = app.add_subcommand("list", "stream an enumeration");
    list->add_option("--what", what)->required();
    list->add_option("--profile", profile_str);
    list->add_option("--root", root);
    list->add_option("--d", d);
    list->add_option("--n", n);

    auto* bijection = app.add_subcommand("bijection", "apply a bijective move");
    bijection->add_option("--move", move)->required();
    bijection->add_option("--in", input);
    bijection->add_option("--s", s);
    bijection->add_option("--t", t);
    bijection->add_option("--i", i);
    bijection->add_option("--j", j);
    bijection->add_option("--k", k);
    bijection->add_option("--r", r);
    bijection->add_flag("--verify", check, "check the inverse move round-trips");

    auto* lagrange = app.add_subcommand("lagrange", "Lagrange inversion routes");
    lagrange->add_option("--route", route)->required();
    lagrange->add_option("--system", input);
    lagrange->add_option("--n", gamma_str);
    lagrange->add_option("--root", root);

    auto* cacti = app.add_subcommand("cacti", "planar cactus operations");
    cacti->add_option("--action", action)->required();
    cacti->add_option("--d", d);
    cacti->add_option("--profile", profile_str);
    cacti->add_option("--gamma", gamma_str);

    auto* verify = app.add_subcommand("verify", "run brute-force cross-checks");
    verify->add_option("--suite", suite);
    verify->add_option("--max-vertices", max_vertices);
    verify->add_option("--max-d", max_d);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed())
            return run_count(stat, profile_str, root, gamma_str, m_str, arcs_str,
                             counts_str, classes_json);
        if (gf->parsed()) return run_gf(kind, profile_str, root);
        if (list->parsed()) return run_list(what, profile_str, root, d, n);
        if (bijection->parsed())
            return run_bijection(move, input, s, t, i, j, k, r, check);
        if (lagrange->parsed()) return run_lagrange(route, input, gamma_str, root);
        if (cacti->parsed()) return run_cacti(action, d, profile_str, gamma_str);
        if (verify->parsed()) return run_verify(suite, max_vertices, max_d, seed);
    } catch (const SizeError& e) {
        std::cerr << "size bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
