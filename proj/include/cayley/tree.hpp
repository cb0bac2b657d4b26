#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cayley/algebra.hpp"

namespace cayley {

// Vertex counts per type, n = (n_1, ..., n_d). Every n_t must be positive.
class Profile {
public:
    explicit Profile(std::vector<int> counts);

    int type_count() const { return static_cast<int>(counts_.size()); }
    int count(int type) const { return counts_.at(type - 1); }
    const std::vector<int>& counts() const { return counts_; }
    int vertex_count() const;

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<int> counts_;
};

struct VertexId {
    int type;
    int label;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::vector<VertexId> all_vertices(const Profile& profile);

// Indegree vector: gamma[(s, (t,i))] = number of type-s children of (t,i).
struct IndegreeVector {
    std::map<std::pair<int, VertexId>, int> gamma;

    int at(int s, VertexId v) const {
        auto it = gamma.find({s, v});
        return it == gamma.end() ? 0 : it->second;
    }
    // n_s = delta_{s,rho} + sum_{t,i} gamma_{s,t,i} for all s.
    bool consistent_with(const Profile& profile, int root_type) const;
    friend bool operator==(const IndegreeVector&, const IndegreeVector&) = default;
};

// m[(s,t)] = number of edges from a type-s child to a type-t parent.
struct EdgeTypeMatrix {
    std::map<std::pair<int, int>, int> m;

    int at(int s, int t) const {
        auto it = m.find({s, t});
        return it == m.end() ? 0 : it->second;
    }
    bool consistent_with(const Profile& profile, int root_type) const;
    friend bool operator==(const EdgeTypeMatrix&, const EdgeTypeMatrix&) = default;
};

// N[(t, c)] = number of type-t vertices with indegree tuple c = (c_1..c_d).
struct DegreeClassCounts {
    std::map<std::pair<int, std::vector<int>>, int> N;
    friend bool operator==(const DegreeClassCounts&, const DegreeClassCounts&) = default;
};

// N[(t, u, c)] with u in [d+1]; u = d+1 marks the root's fictitious parent.
struct CompleteTypeCounts {
    std::map<std::tuple<int, int, std::vector<int>>, int> N;
    friend bool operator==(const CompleteTypeCounts&, const CompleteTypeCounts&) = default;
};

class RootedMultitypeTree {
public:
    RootedMultitypeTree(Profile profile, VertexId root,
                        std::map<VertexId, VertexId> parent);

    // Skips invariant validation; for generators that are valid by
    // construction (enumeration hot loops).
    static RootedMultitypeTree unchecked(Profile profile, VertexId root,
                                         std::map<VertexId, VertexId> parent);

    const Profile& profile() const { return profile_; }
    VertexId root() const { return root_; }
    const std::map<VertexId, VertexId>& parent_map() const { return parent_; }
    std::optional<VertexId> parent(VertexId v) const;
    int vertex_count() const { return profile_.vertex_count(); }

    friend bool operator==(const RootedMultitypeTree&, const RootedMultitypeTree&) = default;

private:
    struct UncheckedTag {};
    RootedMultitypeTree(UncheckedTag, Profile profile, VertexId root,
                        std::map<VertexId, VertexId> parent)
        : profile_(std::move(profile)), root_(root), parent_(std::move(parent)) {}

    Profile profile_;
    VertexId root_;
    std::map<VertexId, VertexId> parent_;
};

class RootedForest {
public:
    RootedForest(Profile profile, std::vector<VertexId> roots,
                 std::map<VertexId, VertexId> parent);

    const Profile& profile() const { return profile_; }
    const std::vector<VertexId>& roots() const { return roots_; }
    const std::map<VertexId, VertexId>& parent_map() const { return parent_; }

    friend bool operator==(const RootedForest&, const RootedForest&) = default;

private:
    Profile profile_;
    std::vector<VertexId> roots_;  // sorted, no duplicates
    std::map<VertexId, VertexId> parent_;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Returns std::nullopt on success, or a description of the first violated
// invariant (label ranges, acyclicity, connectivity to the root).
std::optional<std::string> validate_tree(const Profile& profile, VertexId root,
                                         const std::map<VertexId, VertexId>& parent);
std::optional<std::string> validate_forest(const Profile& profile,
                                           const std::vector<VertexId>& roots,
                                           const std::map<VertexId, VertexId>& parent);

IndegreeVector indegree_vector(const RootedMultitypeTree& tree);
EdgeTypeMatrix edge_type_counts(const RootedMultitypeTree& tree);
DegreeClassCounts degree_class_counts(const RootedMultitypeTree& tree);
CompleteTypeCounts complete_type_counts(const RootedMultitypeTree& tree);

EdgeTypeMatrix edge_type_marginals(const IndegreeVector& gamma);

// {"d": int, "profile": [int], "root": [t,i], "parents": [[[t,i],[u,j]],...]}
nlohmann::json to_json(const RootedMultitypeTree& tree);
nlohmann::json to_json(const RootedForest& forest);
RootedMultitypeTree tree_from_json(const nlohmann::json& j);
RootedForest forest_from_json(const nlohmann::json& j);

}  // namespace cayley
