#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cayley/tree.hpp"

namespace cayley {

// Unitype Cayley tree on [d] rooted at `root`, oriented toward the root.
struct CayleySkeleton {
    int d = 1;
    int root = 1;
    std::map<int, int> parent;  // domain [d] minus root

    bool has_edge(int s, int t) const {
        auto it = parent.find(s);
        return it != parent.end() && it->second == t;
    }
    friend bool operator==(const CayleySkeleton&, const CayleySkeleton&) = default;
};

// Unlabeled rooted plane tree: ordered children, each a plane tree.
struct PlaneTree {
    std::vector<PlaneTree> children;

    int vertex_count() const {
        int n = 1;
        for (const auto& c : children) n += c.vertex_count();
        return n;
    }
    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

struct EnumBounds {
    int max_tree_vertices = 9;
    int max_skeleton_types = 8;
    int max_plane_vertices = 12;
    int max_cactus_size = 4;
};

// Prufer code for unrooted labeled trees on an ordered vertex list.
// Sequences are over vertex indices; trees are edge lists.
std::vector<std::pair<int, int>> prufer_decode(int vertex_count,
                                               const std::vector<int>& code);
std::vector<int> prufer_encode(int vertex_count,
                               std::vector<std::pair<int, int>> edges);

// Every rooted multitype Cayley tree of the profile with root type rho,
// exactly once, in a fixed deterministic order.
void enumerate_trees(const Profile& profile, int root_type,
                     const std::function<void(const RootedMultitypeTree&)>& visit,
                     const EnumBounds& bounds = {});

void enumerate_forests(const Profile& profile,
                       const std::function<void(const RootedForest&)>& visit,
                       const EnumBounds& bounds = {});

void enumerate_skeletons(int d, int root,
                         const std::function<void(const CayleySkeleton&)>& visit,
                         const EnumBounds& bounds = {});
std::vector<CayleySkeleton> all_skeletons(int d, int root,
                                          const EnumBounds& bounds = {});

void enumerate_plane_trees(int vertex_count,
                           const std::function<void(const PlaneTree&)>& visit,
                           const EnumBounds& bounds = {});

template <typename Enumerate, typename Predicate>
Int count_filtered(Enumerate&& enumerate, Predicate&& pred) {
    Int count = 0;
    enumerate([&](const auto& item) {
        if (pred(item)) ++count;
    });
    return count;
}

}  // namespace cayley
