#include "cayley/tree.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <set>
#include <sstream>

namespace cayley {

namespace {

std::string describe(VertexId v) {
    std::ostringstream out;
    out << "(" << v.type << "," << v.label << ")";
    return out.str();
}

}  // namespace

Profile::Profile(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw ValidationError("profile needs at least one type");
    for (int n : counts_)
        if (n < 1) throw ValidationError("profile counts must be positive");
}

int Profile::vertex_count() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::vector<VertexId> all_vertices(const Profile& profile) {
    std::vector<VertexId> out;
    out.reserve(profile.vertex_count());
    for (int t = 1; t <= profile.type_count(); ++t)
        for (int i = 1; i <= profile.count(t); ++i) out.push_back({t, i});
    return out;
}

bool IndegreeVector::consistent_with(const Profile& profile, int root_type) const {
    std::vector<int> totals(profile.type_count() + 1, 0);
    for (const auto& [key, g] : gamma) {
        auto [s, v] = key;
        if (s < 1 || s > profile.type_count()) return false;
        totals[s] += g;
    }
    for (int s = 1; s <= profile.type_count(); ++s)
        if (profile.count(s) != (s == root_type ? 1 : 0) + totals[s]) return false;
    return true;
}

bool EdgeTypeMatrix::consistent_with(const Profile& profile, int root_type) const {
    std::vector<int> totals(profile.type_count() + 1, 0);
    for (const auto& [key, count] : m) {
        auto [s, t] = key;
        if (s < 1 || s > profile.type_count() || t < 1 || t > profile.type_count())
            return false;
        totals[s] += count;
    }
    for (int s = 1; s <= profile.type_count(); ++s)
        if (profile.count(s) != (s == root_type ? 1 : 0) + totals[s]) return false;
    return true;
}

std::optional<std::string> validate_tree(const Profile& profile, VertexId root,
                                         const std::map<VertexId, VertexId>& parent) {
    auto in_range = [&](VertexId v) {
        return v.type >= 1 && v.type <= profile.type_count() && v.label >= 1 &&
               v.label <= profile.count(v.type);
    };
    if (!in_range(root)) return "root " + describe(root) + " outside profile range";
    for (const auto& [child, par] : parent) {
        if (!in_range(child)) return "vertex " + describe(child) + " outside profile range";
        if (!in_range(par)) return "parent " + describe(par) + " outside profile range";
        if (child == root) return "root has a parent entry";
    }
    if (static_cast<int>(parent.size()) != profile.vertex_count() - 1)
        return "parent map does not cover every non-root vertex";
    // Every vertex must reach the root without revisiting anything.
    for (auto v : all_vertices(profile)) {
        std::set<VertexId> seen;
        while (v != root) {
            if (!seen.insert(v).second) return "cycle through " + describe(v);
            auto it = parent.find(v);
            if (it == parent.end()) return "vertex " + describe(v) + " has no parent";
            v = it->second;
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_forest(const Profile& profile,
                                           const std::vector<VertexId>& roots,
                                           const std::map<VertexId, VertexId>& parent) {
    if (roots.empty()) return "forest needs at least one root";
    std::set<VertexId> root_set(roots.begin(), roots.end());
    if (root_set.size() != roots.size()) return "duplicate root";
    auto in_range = [&](VertexId v) {
        return v.type >= 1 && v.type <= profile.type_count() && v.label >= 1 &&
               v.label <= profile.count(v.type);
    };
    for (auto r : roots) {
        if (!in_range(r)) return "root " + describe(r) + " outside profile range";
        if (parent.contains(r)) return "root " + describe(r) + " has a parent";
    }
    if (static_cast<int>(parent.size() + roots.size()) != profile.vertex_count())
        return "parent map does not cover every non-root vertex";
    for (auto v : all_vertices(profile)) {
        std::set<VertexId> seen;
        while (!root_set.contains(v)) {
            if (!seen.insert(v).second) return "cycle through " + describe(v);
            auto it = parent.find(v);
            if (it == parent.end()) return "vertex " + describe(v) + " has no parent";
            v = it->second;
        }
    }
    return std::nullopt;
}

RootedMultitypeTree::RootedMultitypeTree(Profile profile, VertexId root,
                                         std::map<VertexId, VertexId> parent)
    : profile_(std::move(profile)), root_(root), parent_(std::move(parent)) {
    if (auto err = validate_tree(profile_, root_, parent_))
        throw ValidationError(*err);
}

RootedMultitypeTree RootedMultitypeTree::unchecked(Profile profile, VertexId root,
                                                   std::map<VertexId, VertexId> parent) {
    return RootedMultitypeTree(UncheckedTag{}, std::move(profile), root,
                               std::move(parent));
}

std::optional<VertexId> RootedMultitypeTree::parent(VertexId v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
}

RootedForest::RootedForest(Profile profile, std::vector<VertexId> roots,
                           std::map<VertexId, VertexId> parent)
    : profile_(std::move(profile)), roots_(std::move(roots)), parent_(std::move(parent)) {
    std::sort(roots_.begin(), roots_.end());
    if (auto err = validate_forest(profile_, roots_, parent_))
        throw ValidationError(*err);
}

IndegreeVector indegree_vector(const RootedMultitypeTree& tree) {
    IndegreeVector out;
    for (const auto& [child, par] : tree.parent_map())
        ++out.gamma[{child.type, par}];
    return out;
}

EdgeTypeMatrix edge_type_counts(const RootedMultitypeTree& tree) {
    EdgeTypeMatrix out;
    for (const auto& [child, par] : tree.parent_map())
        ++out.m[{child.type, par.type}];
    return out;
}

EdgeTypeMatrix edge_type_marginals(const IndegreeVector& gamma) {
    EdgeTypeMatrix out;
    for (const auto& [key, g] : gamma.gamma) {
        auto [s, v] = key;
        if (g > 0) out.m[{s, v.type}] += g;
    }
    return out;
}

namespace {

std::map<VertexId, std::vector<int>> indegree_tuples(const RootedMultitypeTree& tree) {
    const int d = tree.profile().type_count();
    std::map<VertexId, std::vector<int>> out;
    for (auto v : all_vertices(tree.profile())) out[v].assign(d, 0);
    for (const auto& [child, par] : tree.parent_map())
        ++out[par][child.type - 1];
    return out;
}

}  // namespace

DegreeClassCounts degree_class_counts(const RootedMultitypeTree& tree) {
    DegreeClassCounts out;
    for (const auto& [v, tuple] : indegree_tuples(tree)) ++out.N[{v.type, tuple}];
    return out;
}

CompleteTypeCounts complete_type_counts(const RootedMultitypeTree& tree) {
    const int d = tree.profile().type_count();
    CompleteTypeCounts out;
    for (const auto& [v, tuple] : indegree_tuples(tree)) {
        auto par = tree.parent(v);
        int u = par ? par->type : d + 1;
        ++out.N[{v.type, u, tuple}];
    }
    return out;
}

namespace {

nlohmann::json vertex_json(VertexId v) {
    return nlohmann::json::array({v.type, v.label});
}

VertexId vertex_from_json(const nlohmann::json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

nlohmann::json parents_json(const std::map<VertexId, VertexId>& parent) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [child, par] : parent)
        out.push_back(nlohmann::json::array({vertex_json(child), vertex_json(par)}));
    return out;
}

std::map<VertexId, VertexId> parents_from_json(const nlohmann::json& j) {
    std::map<VertexId, VertexId> out;
    for (const auto& entry : j)
        out.emplace(vertex_from_json(entry.at(0)), vertex_from_json(entry.at(1)));
    return out;
}

}  // namespace

nlohmann::json to_json(const RootedMultitypeTree& tree) {
    return {{"d", tree.profile().type_count()},
            {"profile", tree.profile().counts()},
            {"root", vertex_json(tree.root())},
            {"parents", parents_json(tree.parent_map())}};
}

nlohmann::json to_json(const RootedForest& forest) {
    nlohmann::json roots = nlohmann::json::array();
    for (auto r : forest.roots()) roots.push_back(vertex_json(r));
    return {{"d", forest.profile().type_count()},
            {"profile", forest.profile().counts()},
            {"roots", std::move(roots)},
            {"parents", parents_json(forest.parent_map())}};
}

RootedMultitypeTree tree_from_json(const nlohmann::json& j) {
    return RootedMultitypeTree(Profile(j.at("profile").get<std::vector<int>>()),
                               vertex_from_json(j.at("root")),
                               parents_from_json(j.at("parents")));
}

RootedForest forest_from_json(const nlohmann::json& j) {
    std::vector<VertexId> roots;
    for (const auto& r : j.at("roots")) roots.push_back(vertex_from_json(r));
    return RootedForest(Profile(j.at("profile").get<std::vector<int>>()),
                        std::move(roots), parents_from_json(j.at("parents")));
}

}  // namespace cayley
