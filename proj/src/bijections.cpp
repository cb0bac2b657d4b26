#include "cayley/bijections.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace cayley {

std::vector<int> unitype_degrees(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> deg(n + 1, 0);
    for (auto [a, b] : edges) {
        ++deg.at(a);
        ++deg.at(b);
    }
    deg.erase(deg.begin());
    return deg;
}

namespace {

// Vertices of the a--b path in an unrooted tree, endpoints included.
std::vector<int> unitype_path(int n, const std::vector<std::pair<int, int>>& edges,
                              int a, int b) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj.at(u).push_back(v);
        adj.at(v).push_back(u);
    }
    std::vector<int> prev(n + 1, 0);
    std::vector<int> queue{a};
    prev[a] = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : adj[v]) {
            if (prev[w] != 0) continue;
            prev[w] = v;
            queue.push_back(w);
        }
    }
    if (prev[b] == 0) throw BijectionError("input is not a tree");
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

MarkedUnitypeTree phi_unitype(const MarkedUnitypeTree& m, int i, int j) {
    if (i == j) throw BijectionError("vertices i and j must differ");
    if (m.pivot != i) throw BijectionError("marked edge must pivot on vertex i");
    bool present = false;
    for (auto [a, b] : m.edges)
        present |= (a == m.pivot && b == m.other) || (a == m.other && b == m.pivot);
    if (!present) throw BijectionError("marked edge is not in the tree");
    auto path = unitype_path(m.n, m.edges, i, j);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        bool on_path = (path[k] == i && path[k + 1] == m.other) ||
                       (path[k] == m.other && path[k + 1] == i);
        if (on_path) throw BijectionError("marked edge lies on the i--j path");
    }
    MarkedUnitypeTree out = m;
    for (auto& [a, b] : out.edges) {
        if (a == i && b == m.other) a = j;
        else if (b == i && a == m.other) b = j;
    }
    out.pivot = j;
    return out;
}

namespace {

bool is_ancestor_or_self(const RootedMultitypeTree& tree, VertexId anc, VertexId v) {
    while (true) {
        if (v == anc) return true;
        auto p = tree.parent(v);
        if (!p) return false;
        v = *p;
    }
}

}  // namespace

bool is_hat_case(const MarkedTree& m, int t, int i, int j) {
    // The marked edge (c -> (t,i)) lies on the (t,i)--(t,j) path exactly
    // when c is an ancestor of (or equal to) (t,j).
    return !is_ancestor_or_self(m.tree, m.marked_child, VertexId{t, j});
}

MarkedTree classify_and_apply(const MarkedTree& m, int s, int t, int i, int j) {
    const Profile& profile = m.tree.profile();
    if (t < 1 || t > profile.type_count() || s < 1 || s > profile.type_count())
        throw BijectionError("type out of range");
    if (i == j) throw BijectionError("labels i and j must differ");
    if (i < 1 || i > profile.count(t) || j < 1 || j > profile.count(t))
        throw BijectionError("label out of range");
    if (m.marked_child.type != s) throw BijectionError("marked child has the wrong type");
    const VertexId vi{t, i}, vj{t, j};
    if (m.marked_parent() != vi)
        throw BijectionError("marked edge is not glued to (t,i)");

    std::map<VertexId, VertexId> parent = m.tree.parent_map();
    VertexId root = m.tree.root();
    VertexId marked = m.marked_child;
    if (is_hat_case(m, t, i, j)) {
        parent[marked] = vj;
    } else {
        // Swap the unmarked attachments of (t,i) and (t,j), then swap the
        // labels themselves (which also carries the marked edge to (t,j)).
        for (auto& [child, par] : parent) {
            if (child == marked) continue;
            if (par == vi) par = vj;
            else if (par == vj) par = vi;
        }
        auto swap_label = [&](VertexId v) {
            if (v == vi) return vj;
            if (v == vj) return vi;
            return v;
        };
        std::map<VertexId, VertexId> relabeled;
        for (const auto& [child, par] : parent)
            relabeled.emplace(swap_label(child), swap_label(par));
        parent = std::move(relabeled);
        root = swap_label(root);
        marked = swap_label(marked);
    }
    return MarkedTree{RootedMultitypeTree(profile, root, std::move(parent)), marked};
}

bool is_star_tree(const RootedMultitypeTree& tree) {
    for (const auto& [child, par] : tree.parent_map())
        if (par.label != 1) return false;
    return true;
}

CayleySkeleton star_core(const RootedMultitypeTree& tree) {
    if (!is_star_tree(tree)) throw BijectionError("not a star tree");
    const int d = tree.profile().type_count();
    CayleySkeleton skel{d, tree.root().type, {}};
    if (tree.vertex_count() > 1 && tree.root().label != 1)
        throw BijectionError("not a star tree");
    for (int t = 1; t <= d; ++t) {
        if (VertexId{t, 1} == tree.root()) continue;
        auto p = tree.parent(VertexId{t, 1});
        if (!p) throw BijectionError("core vertex is disconnected");
        skel.parent.emplace(t, p->type);
    }
    return skel;
}

nlohmann::json to_json(const MarkedTree& m) {
    auto parent = m.marked_parent();
    return {{"tree", to_json(m.tree)},
            {"marked_edge",
             nlohmann::json::array(
                 {nlohmann::json::array({m.marked_child.type, m.marked_child.label}),
                  nlohmann::json::array({parent.type, parent.label})})}};
}

MarkedTree marked_tree_from_json(const nlohmann::json& j) {
    MarkedTree m{tree_from_json(j.at("tree")),
                 VertexId{j.at("marked_edge").at(0).at(0).get<int>(),
                          j.at("marked_edge").at(0).at(1).get<int>()}};
    VertexId declared{j.at("marked_edge").at(1).at(0).get<int>(),
                      j.at("marked_edge").at(1).at(1).get<int>()};
    if (m.marked_parent() != declared)
        throw BijectionError("marked edge is not an edge of the tree");
    return m;
}

}  // namespace cayley
