#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cayley/enumerate.hpp"
#include "cayley/tree.hpp"

namespace cayley {

struct BijectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rooted tree with a marked edge, stored as the child endpoint; the other
// endpoint is the child's parent.
struct MarkedTree {
    RootedMultitypeTree tree;
    VertexId marked_child;

    VertexId marked_parent() const {
        auto p = tree.parent(marked_child);
        if (!p) throw BijectionError("marked edge child is the root");
        return *p;
    }
    friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
};

// Unrooted unitype Cayley tree on [n] with a marked edge; `pivot` is the
// endpoint of the marked edge the move detaches from.
struct MarkedUnitypeTree {
    int n = 1;
    std::vector<std::pair<int, int>> edges;
    int pivot = 1;
    int other = 1;  // second endpoint of the marked edge

    friend bool operator==(const MarkedUnitypeTree&, const MarkedUnitypeTree&) = default;
};

std::vector<int> unitype_degrees(int n, const std::vector<std::pair<int, int>>& edges);

// Degree-shifting move on unrooted unitype trees: detaches the marked edge
// from vertex i and reattaches it at j. Requires pivot == i and the marked
// edge off the i--j path; the image satisfies the mirrored precondition
// with i and j swapped, and the move with (j, i) inverts it.
MarkedUnitypeTree phi_unitype(const MarkedUnitypeTree& m, int i, int j);

// Indegree-shifting move on marked rooted multitype trees. The marked edge
// must join (t,i) to one of its type-s children. When the marked edge is off
// the (t,i)--(t,j) path the edge is simply re-glued to (t,j); otherwise the
// unmarked attachments of (t,i) and (t,j) are swapped along with the labels.
// The (s,t,j,i) move inverts it.
MarkedTree classify_and_apply(const MarkedTree& m, int s, int t, int i, int j);

// True when the marked edge is off the (t,i)--(t,j) path (the re-glue case).
bool is_hat_case(const MarkedTree& m, int t, int i, int j);

bool is_star_tree(const RootedMultitypeTree& tree);

// Skeleton on the label-1 vertices of a star tree, rooted at (rho, 1).
CayleySkeleton star_core(const RootedMultitypeTree& tree);

nlohmann::json to_json(const MarkedTree& m);
MarkedTree marked_tree_from_json(const nlohmann::json& j);

}  // namespace cayley
