#include "cayley/enumerate.hpp"

#include <algorithm>

namespace cayley {

std::vector<std::pair<int, int>> prufer_decode(int vertex_count,
                                               const std::vector<int>& code) {
    if (vertex_count < 1) throw std::invalid_argument("need at least one vertex");
    if (vertex_count == 1) {
        if (!code.empty()) throw std::invalid_argument("code too long");
        return {};
    }
    if (static_cast<int>(code.size()) != vertex_count - 2)
        throw std::invalid_argument("code length must be n-2");
    std::vector<int> degree(vertex_count, 1);
    for (int a : code) {
        if (a < 0 || a >= vertex_count) throw std::invalid_argument("code entry out of range");
        ++degree[a];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(vertex_count - 1);
    for (int a : code) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, a);
        degree[leaf] = 0;
        --degree[a];
    }
    int u = -1;
    for (int v = 0; v < vertex_count; ++v) {
        if (degree[v] != 1) continue;
        if (u < 0) u = v;
        else edges.emplace_back(u, v);
    }
    return edges;
}

std::vector<int> prufer_encode(int vertex_count,
                               std::vector<std::pair<int, int>> edges) {
    if (static_cast<int>(edges.size()) != vertex_count - 1)
        throw std::invalid_argument("edge count must be n-1");
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> degree(vertex_count);
    for (int v = 0; v < vertex_count; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<bool> removed(vertex_count, false);
    std::vector<int> code;
    for (int step = 0; step < vertex_count - 2; ++step) {
        int leaf = 0;
        while (removed[leaf] || degree[leaf] != 1) ++leaf;
        removed[leaf] = true;
        for (int w : adj[leaf]) {
            if (removed[w]) continue;
            code.push_back(w);
            --degree[w];
            break;
        }
    }
    return code;
}

namespace {

// Runs fn over every Prufer code of length n-2 over [0, n), in lex order.
void for_each_code(int n, const std::function<void(const std::vector<int>&)>& fn) {
    const int len = std::max(0, n - 2);
    std::vector<int> code(len, 0);
    while (true) {
        fn(code);
        int pos = len - 1;
        while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
}

std::map<VertexId, VertexId> orient_toward(
    const std::vector<std::pair<int, int>>& edges,
    const std::vector<VertexId>& vertices, int root_index) {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<VertexId, VertexId> parent;
    std::vector<int> stack{root_index};
    std::vector<bool> seen(vertices.size(), false);
    seen[root_index] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent.emplace(vertices[w], vertices[v]);
            stack.push_back(w);
        }
    }
    return parent;
}

}  // namespace

void enumerate_trees(const Profile& profile, int root_type,
                     const std::function<void(const RootedMultitypeTree&)>& visit,
                     const EnumBounds& bounds) {
    if (root_type < 1 || root_type > profile.type_count())
        throw std::invalid_argument("root type out of range");
    const int n = profile.vertex_count();
    if (n > bounds.max_tree_vertices)
        throw SizeError("profile exceeds the tree enumeration bound");
    const auto vertices = all_vertices(profile);
    std::vector<int> root_indices;
    for (int k = 0; k < n; ++k)
        if (vertices[k].type == root_type) root_indices.push_back(k);
    for_each_code(n, [&](const std::vector<int>& code) {
        auto edges = prufer_decode(n, code);
        for (int r : root_indices)
            visit(RootedMultitypeTree::unchecked(profile, vertices[r],
                                                 orient_toward(edges, vertices, r)));
    });
}

void enumerate_forests(const Profile& profile,
                       const std::function<void(const RootedForest&)>& visit,
                       const EnumBounds& bounds) {
    const int n = profile.vertex_count();
    if (n > bounds.max_tree_vertices)
        throw SizeError("profile exceeds the tree enumeration bound");
    // Trees on V plus a virtual vertex, rooted there, are exactly the
    // rooted forests on V (the virtual vertex's children are the roots).
    auto vertices = all_vertices(profile);
    const int virt = n;
    vertices.push_back({0, 0});  // placeholder, never emitted
    for_each_code(n + 1, [&](const std::vector<int>& code) {
        auto edges = prufer_decode(n + 1, code);
        std::vector<std::vector<int>> adj(n + 1);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<VertexId> roots;
        std::map<VertexId, VertexId> parent;
        std::vector<int> stack{virt};
        std::vector<bool> seen(n + 1, false);
        seen[virt] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                if (v == virt) roots.push_back(vertices[w]);
                else parent.emplace(vertices[w], vertices[v]);
                stack.push_back(w);
            }
        }
        visit(RootedForest(profile, std::move(roots), std::move(parent)));
    });
}

void enumerate_skeletons(int d, int root,
                         const std::function<void(const CayleySkeleton&)>& visit,
                         const EnumBounds& bounds) {
    if (d < 1 || root < 1 || root > d)
        throw std::invalid_argument("bad skeleton parameters");
    if (d > bounds.max_skeleton_types)
        throw SizeError("skeleton type count exceeds bound");
    for_each_code(d, [&](const std::vector<int>& code) {
        auto edges = prufer_decode(d, code);
        std::vector<std::vector<int>> adj(d);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        CayleySkeleton skel{d, root, {}};
        std::vector<int> stack{root - 1};
        std::vector<bool> seen(d, false);
        seen[root - 1] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                skel.parent.emplace(w + 1, v + 1);
                stack.push_back(w);
            }
        }
        visit(skel);
    });
}

std::vector<CayleySkeleton> all_skeletons(int d, int root, const EnumBounds& bounds) {
    std::vector<CayleySkeleton> out;
    enumerate_skeletons(d, root, [&](const CayleySkeleton& s) { out.push_back(s); },
                        bounds);
    return out;
}

namespace {

std::vector<PlaneTree> plane_trees_of_size(int n);

// Ordered sequences of plane trees with k vertices in total.
std::vector<std::vector<PlaneTree>> plane_forests_of_size(int k) {
    std::vector<std::vector<PlaneTree>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= k; ++first) {
        auto heads = plane_trees_of_size(first);
        auto tails = plane_forests_of_size(k - first);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                std::vector<PlaneTree> seq{h};
                seq.insert(seq.end(), t.begin(), t.end());
                out.push_back(std::move(seq));
            }
    }
    return out;
}

std::vector<PlaneTree> plane_trees_of_size(int n) {
    std::vector<PlaneTree> out;
    for (auto& forest : plane_forests_of_size(n - 1))
        out.push_back(PlaneTree{std::move(forest)});
    return out;
}

}  // namespace

void enumerate_plane_trees(int vertex_count,
                           const std::function<void(const PlaneTree&)>& visit,
                           const EnumBounds& bounds) {
    if (vertex_count < 1) throw std::invalid_argument("need at least one vertex");
    if (vertex_count > bounds.max_plane_vertices)
        throw SizeError("plane tree size exceeds bound");
    for (const auto& t : plane_trees_of_size(vertex_count)) visit(t);
}

}  // namespace cayley
