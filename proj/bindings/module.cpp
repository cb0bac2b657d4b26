// Thin pybind11 surface. Big integers and rationals cross the boundary as
// decimal strings; structured data crosses as JSON strings (the same
// serialization the CLI emits), so the python side stays dependency-free.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "cayley/bijections.hpp"
#include "cayley/cactus.hpp"
#include "cayley/formulas.hpp"
#include "cayley/lagrange.hpp"
#include "cayley/verify.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace cayley;

namespace {

FunctionalSystem parse_system(const std::string& text) {
    json j = json::parse(text);
    FunctionalSystem system;
    system.d = j.at("d").get<int>();
    system.order = j.at("order").get<int>();
    for (const auto& g : j.at("G")) system.G.push_back(series_from_json(g));
    return system;
}

json report_json(const VerificationReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(
            {{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"suite", report.suite},
            {"cases", report.cases},
            {"failures", failures},
            {"seconds", report.seconds}};
}

}  // namespace

PYBIND11_MODULE(_cayley, m) {
    m.doc() = "multitype Cayley tree enumeration core";

    m.def("count_unitype_degree", [](const std::vector<int>& degrees) {
        return count_unitype_degree(degrees).str();
    });
    m.def("count_plane_trees", [](const std::vector<int>& N) {
        return count_plane_trees(N).str();
    });
    m.def("count_by_edge_types",
          [](const std::vector<int>& profile, int root,
             const std::vector<std::tuple<int, int, int>>& entries) {
              EdgeTypeMatrix mat;
              for (const auto& [s, t, v] : entries) mat.m[{s, t}] = v;
              return count_by_edge_types(mat, Profile(profile), root).str();
          });
    m.def("count_by_indegree",
          [](const std::vector<int>& profile, int root,
             const std::vector<std::tuple<int, int, int, int>>& entries) {
              IndegreeVector gamma;
              for (const auto& [s, t, i, v] : entries)
                  gamma.gamma[{s, VertexId{t, i}}] = v;
              return count_by_indegree_vector(gamma, Profile(profile), root).str();
          });
    m.def("count_cacti_total", [](int d, const std::vector<int>& profile) {
        return count_cacti_total(Profile(profile), d).str();
    });

    m.def("count_trees", [](const std::vector<int>& profile, int root) {
        long long count = 0;
        enumerate_trees(Profile(profile), root,
                        [&](const RootedMultitypeTree&) { ++count; });
        return count;
    });
    m.def("list_trees", [](const std::vector<int>& profile, int root) {
        std::vector<std::string> out;
        enumerate_trees(Profile(profile), root, [&](const RootedMultitypeTree& t) {
            out.push_back(to_json(t).dump());
        });
        return out;
    });
    m.def("list_cacti", [](int d, const std::vector<int>& profile) {
        std::vector<std::string> out;
        enumerate_cacti(d, Profile(profile), [&](const Cactus& c) {
            out.push_back(to_json(c).dump());
        });
        return out;
    });

    m.def("gf_multitype", [](const std::vector<int>& profile, int root) {
        return to_json(gf_multitype(Profile(profile), root)).dump();
    });
    m.def("gf_forests", [](const std::vector<int>& profile) {
        return to_json(gf_forests(Profile(profile))).dump();
    });

    m.def("solve_functional_system", [](const std::string& system_json) {
        std::vector<std::string> out;
        for (const auto& f : solve_functional_system(parse_system(system_json)))
            out.push_back(to_json(f).dump());
        return out;
    });
    m.def("tree_sum_coefficient",
          [](const std::string& system_json, int root, const std::vector<int>& n) {
              return tree_sum_coefficient(parse_system(system_json), root, n).str();
          });
    m.def("lagrange_rhs_coefficient",
          [](const std::string& system_json, const std::vector<int>& n) {
              return lagrange_rhs_coefficient(parse_system(system_json), n).str();
          });
    m.def("observable_coefficient",
          [](const std::string& system_json, const std::vector<int>& n) {
              return observable_coefficient(parse_system(system_json), n).str();
          });

    m.def("apply_indegree_move",
          [](const std::string& marked_tree_json, int s, int t, int i, int j) {
              MarkedTree m = marked_tree_from_json(json::parse(marked_tree_json));
              return to_json(classify_and_apply(m, s, t, i, j)).dump();
          });
    m.def("apply_cactus_phi", [](const std::string& cactus_json, int s, int j, int k) {
        Cactus c = cactus_from_json(json::parse(cactus_json));
        return to_json(cactus_phi(c, s, j, k)).dump();
    });

    m.def("verify", [](const std::string& suite, int max_vertices, int max_d) {
        VerifyOptions opt;
        opt.max_vertices = max_vertices;
        opt.max_d = max_d;
        json out = json::array();
        for (const auto& report : run_suites(suite, opt))
            out.push_back(report_json(report));
        return out.dump();
    }, py::arg("suite"), py::arg("max_vertices") = 5, py::arg("max_d") = 2);

    py::register_exception<SizeError>(m, "SizeError");
    py::register_exception<ValidationError>(m, "ValidationError");
}
