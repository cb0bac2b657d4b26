#pragma once

#include <set>

#include "cayley/algebra.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/tree.hpp"

namespace cayley {

// Digraph on the type set: allowed edge types for embedded trees.
struct EmbeddingDigraph {
    std::set<std::pair<int, int>> edges;

    bool contains(int s, int t) const { return edges.contains({s, t}); }
};

struct GfLimits {
    int max_types = 6;
    std::size_t max_terms = 1'000'000;
};

// Monomial prod x_{s,t,i}^{ch_s(t,i)} recording a tree's indegree vector.
Monomial indegree_monomial(const RootedMultitypeTree& tree);
Monomial indegree_monomial(const IndegreeVector& gamma);
// Same, with roots marked by z variables.
Monomial forest_monomial(const RootedForest& forest);

// Skeleton sum Delta: sum over Cay_rho(d) of prod over edges of
// (sum_i x_{s,t,i}).
Polynomial delta_polynomial(const Profile& profile, int root_type);
// Same value through the matrix-tree route: determinant of the weighted
// Laplacian minor with the rho-th row and column removed.
Polynomial delta_determinant(const Profile& profile, int root_type);
Rat delta_via_determinant(const Profile& profile, int root_type,
                          const std::map<Var, Rat>& substitution);

// Generating function of rooted multitype Cayley trees by indegree vector.
Polynomial gf_multitype(const Profile& profile, int root_type,
                        const GfLimits& limits = {});
// Generating function of rooted multitype forests (z marks roots by type).
Polynomial gf_forests(const Profile& profile, const GfLimits& limits = {});

// Counts by prescribed statistics. Incompatible inputs count zero.
Int count_by_edge_types(const EdgeTypeMatrix& m, const Profile& profile,
                        int root_type);
Int count_embedded(const EmbeddingDigraph& D, const Profile& profile,
                   int root_type);
Int count_injective_by_edge_types(const EdgeTypeMatrix& m, const Profile& profile,
                                  int root_type);
Int count_injective_embedded(const EmbeddingDigraph& D, const Profile& profile,
                             int root_type);
Int count_by_indegree_vector(const IndegreeVector& gamma, const Profile& profile,
                             int root_type);
Int count_by_degree_classes(const DegreeClassCounts& N, int root_type);
Int count_by_complete_types(const CompleteTypeCounts& N, int root_type);
// Fully factorized form; requires rho = d and support condition t <= s+1
// on all positive m_{s,t}.
Int count_complete_special(const CompleteTypeCounts& N);

// Unlabeled rooted plane trees with N[i] vertices having i children.
Int count_plane_trees(const std::vector<int>& N);
// Unrooted unitype Cayley trees with prescribed degree sequence.
Int count_unitype_degree(const std::vector<int>& degrees);

// True when exactly one skeleton has nonzero weight in the edge-type sum;
// in that regime the counting formulas factorize completely.
bool single_skeleton_support(const EdgeTypeMatrix& m, int d, int root_type);

struct CompleteTypeStats {
    int d = 0;
    std::map<std::pair<int, int>, int> m_tu;        // vertices of complete type (t,u)
    std::map<std::tuple<int, int, int>, int> m_stu; // type-s children of (t,u)-vertices
    std::vector<int> n;                              // n_t, 1-based in [d]
    std::map<int, int> N_of_k;
    bool compatible = false;
};
CompleteTypeStats complete_type_stats(const CompleteTypeCounts& N, int root_type);

}  // namespace cayley
