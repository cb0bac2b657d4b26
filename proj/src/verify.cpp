#include "cayley/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "cayley/bijections.hpp"
#include "cayley/cactus.hpp"
#include "cayley/formulas.hpp"
#include "cayley/lagrange.hpp"

namespace cayley {

namespace {

constexpr std::size_t kMaxFailures = 25;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void fail(VerificationReport& report, std::string input, std::string expected,
          std::string actual) {
    if (report.failures.size() < kMaxFailures)
        report.failures.push_back(
            {std::move(input), std::move(expected), std::move(actual)});
}

bool saturated(const VerificationReport& report) {
    return report.failures.size() >= kMaxFailures;
}

std::string str(const Int& v) { return v.str(); }
std::string str(const Rat& v) { return v.str(); }
std::string str(long long v) { return std::to_string(v); }

std::string str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

// All profiles (positive counts) with at most max_d types and total at most
// max_total, in a fixed order.
void for_each_profile(int max_d, int max_total,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> counts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!counts.empty()) fn(counts);
        if (static_cast<int>(counts.size()) == max_d) return;
        for (int next = 1; next <= remaining; ++next) {
            counts.push_back(next);
            self(self, remaining - next);
            counts.pop_back();
        }
    };
    rec(rec, max_total);
}

// Nonnegative compositions of total into `parts` entries.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            cur[pos] = remaining;
            fn(cur);
            return;
        }
        for (int here = 0; here <= remaining; ++here) {
            cur[pos] = here;
            self(self, pos + 1, remaining - here);
        }
    };
    if (parts == 0) {
        if (total == 0) fn(cur);
        return;
    }
    rec(rec, 0, total);
}

// ---------------------------------------------------------------------------
// Flat labeled-tree machinery (independent of the enumerate module): Prufer
// decoding over vertex indices 0..n-1 and BFS orientation.
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> flat_prufer_decode(int n, const std::vector<int>& code) {
    std::vector<std::pair<int, int>> edges;
    if (n <= 1) return edges;
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    std::vector<char> done(n, 0);
    for (int c : code) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && deg[v] == 1) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, c);
        done[leaf] = 1;
        --deg[c];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!done[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return edges;
}

// Iterates codes in [n]^{n-2} lexicographically; yields the decoded edges.
void for_each_labeled_tree(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    if (n == 1) {
        fn({});
        return;
    }
    std::vector<int> code(n - 2, 0);
    while (true) {
        fn(flat_prufer_decode(n, code));
        int pos = static_cast<int>(code.size()) - 1;
        while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
}

// parent[] with parent[root] = -1, from an edge list.
void orient(int n, const std::vector<std::pair<int, int>>& edges, int root,
            std::vector<int>& parent, std::vector<int>& queue,
            const std::vector<std::vector<int>>& adj) {
    parent.assign(n, -2);
    queue.clear();
    queue.push_back(root);
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]]) {
            if (parent[w] != -2) continue;
            parent[w] = queue[head];
            queue.push_back(w);
        }
    (void)edges;
}

bool flat_is_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> dsu(n);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int v) {
        while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
        return v;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        dsu[ra] = rb;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Suite: unitype baseline
// ---------------------------------------------------------------------------

VerificationReport suite_unitype(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"unitype"};
    for (int n = 1; n <= opt.max_vertices && !saturated(report); ++n) {
        // Independent brute force: all (n-1)-subsets of the complete graph's
        // edges that form a spanning tree.
        std::vector<std::pair<int, int>> all_edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
        std::map<std::vector<int>, long long> by_degree;
        long long total = 0;
        std::vector<std::pair<int, int>> chosen;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (static_cast<int>(chosen.size()) == n - 1) {
                if (!flat_is_tree(n, chosen)) return;
                ++total;
                std::vector<int> deg(n, 0);
                for (auto [a, b] : chosen) {
                    ++deg[a];
                    ++deg[b];
                }
                ++by_degree[deg];
                return;
            }
            for (std::size_t k = from; k < all_edges.size(); ++k) {
                chosen.push_back(all_edges[k]);
                self(self, k + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);

        ++report.cases;
        Int expected_total = n >= 2 ? int_pow(Int(n), n - 2) : Int(1);
        if (Int(total) != expected_total)
            fail(report, "n=" + std::to_string(n) + " total", str(expected_total),
                 str(total));

        // Per-degree counts against the closed form, over every admissible
        // degree sequence (positive entries summing to 2(n-1)).
        if (n >= 2) {
            for_each_composition(2 * (n - 1) - n, n, [&](const std::vector<int>& c) {
                std::vector<int> gamma(c);
                for (int& g : gamma) ++g;
                ++report.cases;
                Int formula = count_unitype_degree(gamma);
                auto it = by_degree.find(gamma);
                long long brute = it == by_degree.end() ? 0 : it->second;
                if (formula != Int(brute))
                    fail(report, "n=" + std::to_string(n) + " gamma=" + str(gamma),
                         str(brute), str(formula));
            });
        }

        // Ties the Prufer generator used elsewhere to the subset brute force.
        long long prufer_total = 0;
        for_each_labeled_tree(n, [&](const auto&) { ++prufer_total; });
        ++report.cases;
        if (prufer_total != total)
            fail(report, "n=" + std::to_string(n) + " prufer total", str(total),
                 str(prufer_total));
    }
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: multitype generating function (skeleton-sum identity)
// ---------------------------------------------------------------------------

VerificationReport suite_multitype_gf(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"multitype-gf"};
    for_each_profile(opt.max_d, opt.max_vertices, [&](const std::vector<int>& counts) {
        if (saturated(report)) return;
        const int d = static_cast<int>(counts.size());
        const int n = std::accumulate(counts.begin(), counts.end(), 0);
        std::vector<int> type_of, label_of;
        for (int t = 1; t <= d; ++t)
            for (int i = 1; i <= counts[t - 1]; ++i) {
                type_of.push_back(t);
                label_of.push_back(i);
            }
        // Accumulate the brute-force GF per root type, keyed by the
        // flattened indegree vector.
        std::vector<std::map<std::vector<signed char>, long long>> acc(d + 1);
        std::vector<std::vector<int>> adj(n);
        std::vector<int> parent, queue;
        for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
            for (auto& a : adj) a.clear();
            for (auto [a, b] : edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::vector<signed char> key(static_cast<std::size_t>(d) * n, 0);
            for (int root = 0; root < n; ++root) {
                orient(n, edges, root, parent, queue, adj);
                std::fill(key.begin(), key.end(), 0);
                for (int v = 0; v < n; ++v)
                    if (parent[v] >= 0)
                        ++key[static_cast<std::size_t>(type_of[v] - 1) * n + parent[v]];
                ++acc[type_of[root]][key];
            }
        });
        Profile profile(counts);
        for (int rho = 1; rho <= d; ++rho) {
            Polynomial expected;
            for (const auto& [key, cnt] : acc[rho]) {
                Monomial m;
                for (std::size_t idx = 0; idx < key.size(); ++idx)
                    if (key[idx] > 0) {
                        int s = static_cast<int>(idx) / n + 1;
                        int v = static_cast<int>(idx) % n;
                        m.set_exponent(Var::edge(s, type_of[v], label_of[v]), key[idx]);
                    }
                expected.add_term(m, Rat(cnt));
            }
            ++report.cases;
            Polynomial got = gf_multitype(profile, rho);
            if (!(got == expected))
                fail(report,
                     "profile=" + str(counts) + " rho=" + std::to_string(rho),
                     std::to_string(expected.term_count()) + " terms (brute force)",
                     std::to_string(got.term_count()) + " terms, polynomials differ");
        }
    });
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: determinant form of the skeleton sum
// ---------------------------------------------------------------------------

VerificationReport suite_determinant(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"determinant"};
    std::mt19937 gen(opt.seed);
    const int top = std::max(opt.max_d, 5);
    for (int d = 2; d <= top && !saturated(report); ++d) {
        std::vector<std::vector<int>> profiles{std::vector<int>(d, 1)};
        profiles.push_back(std::vector<int>(d, 1));
        profiles.back()[0] = 2;
        for (const auto& counts : profiles) {
            Profile profile(counts);
            for (int rho = 1; rho <= d; ++rho) {
                Polynomial delta = delta_polynomial(profile, rho);
                for (int round = 0; round < opt.substitutions; ++round) {
                    std::map<Var, Rat> sub;
                    for (int s = 1; s <= d; ++s)
                        for (int t = 1; t <= d; ++t)
                            for (int i = 1; i <= profile.count(t); ++i)
                                sub[Var::edge(s, t, i)] =
                                    Rat(static_cast<int>(gen() % 11) - 5);
                    ++report.cases;
                    Rat direct = delta.evaluate(sub);
                    Rat via_det = delta_via_determinant(profile, rho, sub);
                    if (direct != via_det)
                        fail(report,
                             "d=" + std::to_string(d) + " rho=" + std::to_string(rho) +
                                 " round=" + std::to_string(round),
                             str(direct), str(via_det));
                }
            }
        }
    }
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: forests
// ---------------------------------------------------------------------------

VerificationReport suite_forests(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"forests"};
    for_each_profile(opt.max_d, opt.max_vertices, [&](const std::vector<int>& counts) {
        if (saturated(report)) return;
        Profile profile(counts);
        long long brute = 0;
        enumerate_forests(profile, [&](const RootedForest&) { ++brute; }, opt.bounds);
        Rat from_gf = 0;
        Polynomial gf = gf_forests(profile);
        for (const auto& [m, coeff] : gf.terms()) from_gf += coeff;
        ++report.cases;
        if (from_gf != Rat(brute))
            fail(report, "profile=" + str(counts), str(brute), str(from_gf));
    });
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: counting formulas (edge types, embeddings, injective trees,
// indegree vectors, degree classes, complete types, factorized special case)
// ---------------------------------------------------------------------------

int flat_index(const Profile& profile, VertexId v) {
    int offset = 0;
    for (int t = 1; t < v.type; ++t) offset += profile.count(t);
    return offset + v.label - 1;
}

std::vector<int> flatten_gamma(const RootedMultitypeTree& tree) {
    const Profile& profile = tree.profile();
    const int d = profile.type_count();
    const int n = profile.vertex_count();
    std::vector<int> key(static_cast<std::size_t>(d) * n, 0);
    for (const auto& [child, par] : tree.parent_map())
        ++key[static_cast<std::size_t>(child.type - 1) * n + flat_index(profile, par)];
    return key;
}

IndegreeVector unflatten_gamma(const Profile& profile, const std::vector<int>& key) {
    IndegreeVector gamma;
    const int n = profile.vertex_count();
    auto vertices = all_vertices(profile);
    for (std::size_t idx = 0; idx < key.size(); ++idx)
        if (key[idx] > 0)
            gamma.gamma[{static_cast<int>(idx) / n + 1,
                         vertices[idx % static_cast<std::size_t>(n)]}] = key[idx];
    return gamma;
}

VerificationReport suite_counting(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"counting"};
    for_each_profile(opt.max_d, opt.max_vertices, [&](const std::vector<int>& counts) {
        if (saturated(report)) return;
        Profile profile(counts);
        const int d = profile.type_count();
        const int n = profile.vertex_count();
        for (int rho = 1; rho <= d; ++rho) {
            std::map<std::vector<int>, long long> by_m, by_m_inj, by_gamma;
            std::map<unsigned, std::pair<long long, long long>> by_mask;
            std::map<std::map<std::pair<int, std::vector<int>>, int>, long long> by_class;
            std::map<std::map<std::tuple<int, int, std::vector<int>>, int>, long long>
                by_complete;
            long long total = 0;
            enumerate_trees(profile, rho, [&](const RootedMultitypeTree& tree) {
                ++total;
                std::vector<int> gkey = flatten_gamma(tree);
                bool injective = true;
                for (int e : gkey) injective &= e <= 1;
                std::vector<int> mkey(static_cast<std::size_t>(d) * d, 0);
                unsigned mask = 0;
                for (const auto& [child, par] : tree.parent_map()) {
                    int bit = (child.type - 1) * d + (par.type - 1);
                    ++mkey[bit];
                    mask |= 1u << bit;
                }
                ++by_m[mkey];
                if (injective) ++by_m_inj[mkey];
                auto& pair = by_mask[mask];
                ++pair.first;
                if (injective) ++pair.second;
                ++by_gamma[gkey];
                ++by_class[degree_class_counts(tree).N];
                ++by_complete[complete_type_counts(tree).N];
            }, opt.bounds);

            // Edge-type matrices: full sweep of row-sum-admissible values.
            std::vector<std::vector<std::vector<int>>> rows(d);
            for (int s = 1; s <= d; ++s)
                for_each_composition(counts[s - 1] - (s == rho ? 1 : 0), d,
                                     [&](const std::vector<int>& row) {
                                         rows[s - 1].push_back(row);
                                     });
            std::vector<std::size_t> pick(d, 0);
            while (true) {
                EdgeTypeMatrix m;
                std::vector<int> mkey(static_cast<std::size_t>(d) * d, 0);
                for (int s = 1; s <= d; ++s)
                    for (int t = 1; t <= d; ++t) {
                        int e = rows[s - 1][pick[s - 1]][t - 1];
                        mkey[static_cast<std::size_t>(s - 1) * d + (t - 1)] = e;
                        if (e > 0) m.m[{s, t}] = e;
                    }
                report.cases += 2;
                auto it = by_m.find(mkey);
                long long brute = it == by_m.end() ? 0 : it->second;
                Int formula = count_by_edge_types(m, profile, rho);
                if (formula != Int(brute))
                    fail(report,
                         "edge-types profile=" + str(counts) +
                             " rho=" + std::to_string(rho) + " m=" + str(mkey),
                         str(brute), str(formula));
                auto jt = by_m_inj.find(mkey);
                long long brute_inj = jt == by_m_inj.end() ? 0 : jt->second;
                Int formula_inj = count_injective_by_edge_types(m, profile, rho);
                if (formula_inj != Int(brute_inj))
                    fail(report,
                         "injective-edge-types profile=" + str(counts) +
                             " rho=" + std::to_string(rho) + " m=" + str(mkey),
                         str(brute_inj), str(formula_inj));
                int s = d - 1;
                while (s >= 0 && ++pick[s] == rows[s].size()) pick[s--] = 0;
                if (s < 0) break;
            }

            // Embedding digraphs: all subsets of [d]^2.
            for (unsigned D = 0; D < (1u << (d * d)); ++D) {
                EmbeddingDigraph digraph;
                for (int s = 1; s <= d; ++s)
                    for (int t = 1; t <= d; ++t)
                        if (D & (1u << ((s - 1) * d + (t - 1))))
                            digraph.edges.insert({s, t});
                long long brute = 0, brute_inj = 0;
                for (const auto& [mask, cnt] : by_mask)
                    if ((mask & ~D) == 0) {
                        brute += cnt.first;
                        brute_inj += cnt.second;
                    }
                report.cases += 2;
                Int formula = count_embedded(digraph, profile, rho);
                if (formula != Int(brute))
                    fail(report,
                         "embedded profile=" + str(counts) +
                             " rho=" + std::to_string(rho) + " D=" + std::to_string(D),
                         str(brute), str(formula));
                Int formula_inj = count_injective_embedded(digraph, profile, rho);
                if (formula_inj != Int(brute_inj))
                    fail(report,
                         "injective-embedded profile=" + str(counts) +
                             " rho=" + std::to_string(rho) + " D=" + std::to_string(D),
                         str(brute_inj), str(formula_inj));
            }

            // Indegree vectors: full sweep of admissible values.
            std::vector<std::vector<int>> dist(d);
            auto sweep = [&](auto&& self, int s, std::vector<int>& key) -> void {
                if (s > d) {
                    ++report.cases;
                    IndegreeVector gamma = unflatten_gamma(profile, key);
                    auto it = by_gamma.find(key);
                    long long brute = it == by_gamma.end() ? 0 : it->second;
                    Int formula = count_by_indegree_vector(gamma, profile, rho);
                    if (formula != Int(brute))
                        fail(report,
                             "indegree profile=" + str(counts) +
                                 " rho=" + std::to_string(rho) + " gamma=" + str(key),
                             str(brute), str(formula));
                    return;
                }
                for_each_composition(counts[s - 1] - (s == rho ? 1 : 0), n,
                                     [&](const std::vector<int>& row) {
                                         std::copy(row.begin(), row.end(),
                                                   key.begin() + (s - 1) * n);
                                         self(self, s + 1, key);
                                     });
            };
            std::vector<int> key(static_cast<std::size_t>(d) * n, 0);
            sweep(sweep, 1, key);

            // Degree classes and complete types: each observed value matches
            // the closed form, and the observed values exhaust the trees.
            long long class_total = 0, complete_total = 0;
            for (const auto& [N, cnt] : by_class) {
                ++report.cases;
                class_total += cnt;
                Int formula = count_by_degree_classes(DegreeClassCounts{N}, rho);
                if (formula != Int(cnt))
                    fail(report,
                         "degree-classes profile=" + str(counts) +
                             " rho=" + std::to_string(rho),
                         str(cnt), str(formula));
            }
            for (const auto& [N, cnt] : by_complete) {
                ++report.cases;
                complete_total += cnt;
                CompleteTypeCounts counts_obj{N};
                Int formula = count_by_complete_types(counts_obj, rho);
                if (formula != Int(cnt))
                    fail(report,
                         "complete-types profile=" + str(counts) +
                             " rho=" + std::to_string(rho),
                         str(cnt), str(formula));
                // Factorized special case on its support domain.
                if (rho == d) {
                    std::map<std::pair<int, int>, long long> edge_types;
                    for (const auto& [tuc, k] : N) {
                        const auto& [t, u, c] = tuc;
                        for (int s = 1; s <= d; ++s)
                            edge_types[{s, t}] += static_cast<long long>(k) * c[s - 1];
                    }
                    bool supported = true;
                    for (const auto& [st, cnt_e] : edge_types)
                        if (cnt_e > 0 && st.second > st.first + 1) supported = false;
                    if (supported) {
                        ++report.cases;
                        Int special = count_complete_special(counts_obj);
                        if (special != Int(cnt))
                            fail(report,
                                 "complete-special profile=" + str(counts), str(cnt),
                                 str(special));
                    }
                }
            }
            report.cases += 2;
            if (class_total != total)
                fail(report, "degree-class coverage profile=" + str(counts),
                     str(total), str(class_total));
            if (complete_total != total)
                fail(report, "complete-type coverage profile=" + str(counts),
                     str(total), str(complete_total));
        }
    });
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: bijections
// ---------------------------------------------------------------------------

VerificationReport suite_bijections(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"bijections"};

    // Unrooted unitype move: exhaustive round trips plus the degree-count
    // identity (gamma_i - 1) |T_gamma| = gamma'_j |T_gamma'|.
    for (int n = 2; n <= opt.max_vertices && !saturated(report); ++n) {
        std::map<std::vector<int>, long long> by_degree;
        for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& flat) {
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : flat) edges.emplace_back(a + 1, b + 1);
            std::vector<int> deg = unitype_degrees(n, edges);
            ++by_degree[deg];
            // Neighbor-on-path table: prev[j][v] = neighbor of v on the v--j path.
            std::vector<std::vector<int>> adj(n + 1), prev(n + 1);
            for (auto [a, b] : edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            for (int j = 1; j <= n; ++j) {
                prev[j].assign(n + 1, 0);
                std::vector<int> queue{j};
                prev[j][j] = j;
                for (std::size_t head = 0; head < queue.size(); ++head)
                    for (int w : adj[queue[head]])
                        if (!prev[j][w]) {
                            prev[j][w] = queue[head];
                            queue.push_back(w);
                        }
            }
            for (auto [a, b] : edges)
                for (int swap = 0; swap < 2; ++swap) {
                    int i = swap ? b : a, other = swap ? a : b;
                    MarkedUnitypeTree m{n, edges, i, other};
                    for (int j = 1; j <= n; ++j) {
                        if (j == i) continue;
                        bool applicable = prev[j][i] != other;
                        if (!applicable) continue;
                        ++report.cases;
                        MarkedUnitypeTree out = phi_unitype(m, i, j);
                        std::vector<int> deg2 = unitype_degrees(n, out.edges);
                        std::vector<int> want(deg);
                        --want[i - 1];
                        ++want[j - 1];
                        bool ok = deg2 == want && out.pivot == j;
                        std::vector<std::pair<int, int>> zero_based;
                        for (auto [x, y] : out.edges) zero_based.emplace_back(x - 1, y - 1);
                        ok = ok && flat_is_tree(n, zero_based);
                        MarkedUnitypeTree back = phi_unitype(out, j, i);
                        ok = ok && back == m;
                        if (!ok)
                            fail(report,
                                 "phi-unitype n=" + std::to_string(n) +
                                     " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                 "round trip", "mismatch");
                    }
                }
        });
        for (const auto& [gamma, cnt] : by_degree)
            for (int i = 1; i <= n; ++i) {
                if (gamma[i - 1] < 2) continue;
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    std::vector<int> gamma2(gamma);
                    --gamma2[i - 1];
                    ++gamma2[j - 1];
                    auto it = by_degree.find(gamma2);
                    long long cnt2 = it == by_degree.end() ? 0 : it->second;
                    ++report.cases;
                    if (Int(gamma[i - 1] - 1) * cnt != Int(gamma2[j - 1] - 1) * cnt2)
                        fail(report,
                             "unitype-cardinality n=" + std::to_string(n) +
                                 " gamma=" + str(gamma) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             str(Int(gamma[i - 1] - 1) * cnt),
                             str(Int(gamma2[j - 1] - 1) * cnt2));
                }
            }
    }

    // Rooted multitype move. Round trips are exhaustive up to a slightly
    // smaller total (the full sweep is quadratic in tree count); at the top
    // size every tree still contributes one deterministically rotating case.
    const int rt_exhaustive = std::min(opt.max_vertices, 6);
    for_each_profile(opt.max_d, opt.max_vertices, [&](const std::vector<int>& counts) {
        if (saturated(report)) return;
        Profile profile(counts);
        const int d = profile.type_count();
        const int n = profile.vertex_count();
        for (int rho = 1; rho <= d; ++rho) {
            std::map<std::vector<int>, long long> by_gamma;
            long long tree_index = 0;
            enumerate_trees(profile, rho, [&](const RootedMultitypeTree& tree) {
                std::vector<int> gkey = flatten_gamma(tree);
                ++by_gamma[gkey];
                // Candidate moves: any marked edge, any target label j.
                std::vector<std::tuple<VertexId, int, int, int>> moves;
                for (const auto& [child, par] : tree.parent_map())
                    for (int j = 1; j <= profile.count(par.type); ++j)
                        if (j != par.label)
                            moves.emplace_back(child, par.type, par.label, j);
                if (moves.empty()) return;
                std::size_t lo = 0, hi = moves.size();
                if (n > rt_exhaustive) {
                    lo = static_cast<std::size_t>(tree_index % moves.size());
                    hi = lo + 1;
                }
                ++tree_index;
                for (std::size_t k = lo; k < hi; ++k) {
                    const auto& [child, t, i, j] = moves[k];
                    ++report.cases;
                    MarkedTree m{tree, child};
                    MarkedTree out = classify_and_apply(m, child.type, t, i, j);
                    std::vector<int> want(gkey);
                    --want[static_cast<std::size_t>(child.type - 1) * n +
                           flat_index(profile, VertexId{t, i})];
                    ++want[static_cast<std::size_t>(child.type - 1) * n +
                           flat_index(profile, VertexId{t, j})];
                    bool ok = flatten_gamma(out.tree) == want;
                    ok = ok && out.tree.root().type == rho;
                    MarkedTree back = classify_and_apply(out, child.type, t, j, i);
                    ok = ok && back == m;
                    if (!ok)
                        fail(report,
                             "multitype-move profile=" + str(counts) +
                                 " rho=" + std::to_string(rho) + " t=" +
                                 std::to_string(t) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             "round trip", "mismatch");
                }
            }, opt.bounds);
            // Cardinality identity gamma_{s,t,i} |T| = gamma'_{s,t,j} |T'|,
            // one rotating target label per positive entry.
            for (const auto& [gkey, cnt] : by_gamma)
                for (std::size_t idx = 0; idx < gkey.size(); ++idx) {
                    if (gkey[idx] < 1) continue;
                    int s = static_cast<int>(idx) / n + 1;
                    VertexId v = all_vertices(profile)[idx % static_cast<std::size_t>(n)];
                    int j = v.label % profile.count(v.type) + 1;
                    if (j == v.label) continue;
                    std::vector<int> gkey2(gkey);
                    --gkey2[idx];
                    ++gkey2[static_cast<std::size_t>(s - 1) * n +
                            flat_index(profile, VertexId{v.type, j})];
                    auto it = by_gamma.find(gkey2);
                    long long cnt2 = it == by_gamma.end() ? 0 : it->second;
                    ++report.cases;
                    Int lhs = Int(gkey[idx]) * cnt;
                    Int rhs = Int(gkey2[static_cast<std::size_t>(s - 1) * n +
                                        flat_index(profile, VertexId{v.type, j})]) *
                              cnt2;
                    if (lhs != rhs)
                        fail(report,
                             "multitype-cardinality profile=" + str(counts) +
                                 " rho=" + std::to_string(rho) + " gamma=" + str(gkey),
                             str(lhs), str(rhs));
                }
        }
    });
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: Lagrange inversion
// ---------------------------------------------------------------------------

PowerSeries geometric(int order, int axis = 1) {
    Polynomial p;
    Monomial m;
    for (int k = 0; k < order; ++k) {
        m = Monomial{};
        m.set_exponent(Var::axis(axis), k);
        p.add_term(m, 1);
    }
    return PowerSeries(p, order);
}

PowerSeries poly_series(const Polynomial& p, int order) {
    return PowerSeries(p.truncated(order), order);
}

VerificationReport suite_lagrange(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"lagrange"};
    const int max_degree = 6;

    auto y = [](int t) { return Polynomial::variable(Var::axis(t)); };
    Polynomial one(Rat(1));

    std::vector<FunctionalSystem> battery;
    {
        int ord = max_degree + 1 + 2;
        battery.push_back({1, {poly_series(one + y(1), ord), poly_series(one + y(1), ord)}, ord});
        battery.push_back({1, {geometric(ord), geometric(ord)}, ord});
        battery.push_back({1,
                           {poly_series((one + y(1)) * (one + y(1)), ord),
                            poly_series(one + y(1) * Rat(2), ord)},
                           ord});
        ord = max_degree + 2 + 2;
        battery.push_back({2,
                           {poly_series(one + y(2), ord), poly_series(one + y(1), ord),
                            poly_series(one + y(1) + y(2), ord)},
                           ord});
        battery.push_back({2,
                           {poly_series(one + y(1) + y(2), ord), geometric(ord, 1),
                            poly_series((one + y(1)) * (one + y(2)), ord)},
                           ord});
        if (opt.max_d >= 3) {
            ord = max_degree + 3 + 2;
            Polynomial all = one + y(1) + y(2) + y(3);
            battery.push_back({3,
                               {poly_series(all, ord), poly_series(all, ord),
                                poly_series(all, ord),
                                poly_series(one + y(1) * y(2) * y(3), ord)},
                               ord});
        }
    }

    int system_index = 0;
    for (const auto& system : battery) {
        ++system_index;
        std::string tag = "system " + std::to_string(system_index);
        auto f = solve_functional_system(system, SolveSchedule::WholeSeries);
        auto g = solve_functional_system(system, SolveSchedule::DegreeByDegree);
        ++report.cases;
        if (!(f == g)) fail(report, tag + " schedules", "equal series", "differ");

        for_each_composition(max_degree, system.d + 1, [&](const std::vector<int>& padded) {
            std::vector<int> n(padded.begin(), padded.end() - 1);  // last = slack
            for (int rho = 1; rho <= system.d; ++rho) {
                ++report.cases;
                Rat from_series = f[rho - 1].coefficient(axis_monomial(n));
                Rat from_trees = tree_sum_coefficient(system, rho, n, opt.bounds);
                if (from_series != from_trees)
                    fail(report, tag + " tree-sum n=" + str(n) +
                             " rho=" + std::to_string(rho),
                         str(from_series), str(from_trees));
            }
            if (std::all_of(n.begin(), n.end(), [](int v) { return v > 0; })) {
                ++report.cases;
                Rat direct = observable_coefficient(system, n);
                Rat rhs = lagrange_rhs_coefficient(system, n);
                if (direct != rhs)
                    fail(report, tag + " inversion n=" + str(n), str(direct), str(rhs));
            }
        });
    }

    // Catalan landmark: f = x/(1-f) has coefficients 1,1,2,5,14,...
    const auto catalan_f = solve_functional_system(battery[1])[0];
    const long long catalan[] = {1, 1, 2, 5, 14};
    for (int k = 1; k <= 5; ++k) {
        ++report.cases;
        Rat coeff = catalan_f.coefficient(axis_monomial({k}));
        if (coeff != Rat(catalan[k - 1]))
            fail(report, "catalan k=" + std::to_string(k), str(catalan[k - 1]),
                 str(coeff));
    }
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: cacti
// ---------------------------------------------------------------------------

std::string cactus_key(const Cactus& c) { return to_json(c).dump(); }

std::vector<int> degree_key(const Cactus& c) {
    std::vector<int> out;
    for (const auto& [v, deg] : cactus_degree_vector(c).gamma) {
        out.push_back(v.type);
        out.push_back(v.label);
        out.push_back(deg);
    }
    return out;
}

bool has_star_degrees(const Cactus& c, const Profile& profile, int n) {
    for (const auto& [v, deg] : cactus_degree_vector(c).gamma) {
        int expected = v.label == 1 ? n - profile.count(v.type) + 1 : 1;
        if (deg != expected) return false;
    }
    return true;
}

VerificationReport suite_cacti(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"cacti"};
    for (int d = 2; d <= std::min(3, std::max(opt.max_d, 2)); ++d) {
        const int max_n = std::min(d == 2 ? 3 : 2, opt.bounds.max_cactus_size);
        for (int n = 1; n <= max_n; ++n) {
            const int total_vertices = (d - 1) * n + 1;
            for_each_composition(total_vertices - d, d, [&](const std::vector<int>& c) {
                if (saturated(report)) return;
                std::vector<int> counts(c);
                for (int& v : counts) ++v;
                if (*std::max_element(counts.begin(), counts.end()) > n) return;
                Profile profile(counts);
                std::vector<Cactus> all;
                std::set<std::string> seen;
                std::map<std::vector<int>, long long> by_degree;
                enumerate_cacti(d, profile, [&](const Cactus& cactus) {
                    all.push_back(cactus);
                    if (auto err = validate_cactus(cactus))
                        fail(report, "enumerate profile=" + str(counts), "valid", *err);
                    if (!seen.insert(cactus_key(cactus)).second)
                        fail(report, "enumerate profile=" + str(counts), "distinct",
                             "duplicate");
                    ++by_degree[degree_key(cactus)];
                }, opt.bounds);
                ++report.cases;
                Int total_formula = count_cacti_total(profile, d);
                if (total_formula != Int(all.size()))
                    fail(report, "total profile=" + str(counts),
                         std::to_string(all.size()), str(total_formula));
                for (const auto& [dkey, cnt] : by_degree) {
                    CactusDegreeVector gamma;
                    for (std::size_t k = 0; k < dkey.size(); k += 3)
                        gamma.gamma[{dkey[k], dkey[k + 1]}] = dkey[k + 2];
                    ++report.cases;
                    Int formula = count_cacti_by_degree(gamma, d);
                    if (formula != Int(cnt))
                        fail(report, "by-degree profile=" + str(counts), str(cnt),
                             str(formula));
                }

                // Degree-shifting move: exhaustive round trips.
                for (const Cactus& cactus : all) {
                    CactusDegreeVector gamma = cactus_degree_vector(cactus);
                    for (int s = 1; s <= d; ++s)
                        for (int j = 1; j <= profile.count(s); ++j) {
                            if (gamma.gamma[{s, j}] < 2) continue;
                            for (int k = 1; k <= profile.count(s); ++k) {
                                if (k == j) continue;
                                ++report.cases;
                                Cactus moved = cactus_phi(cactus, s, j, k);
                                bool ok = !validate_cactus(moved).has_value();
                                CactusDegreeVector gamma2 = cactus_degree_vector(moved);
                                ok = ok && gamma2.gamma[{s, j}] == gamma.gamma[{s, j}] - 1 &&
                                     gamma2.gamma[{s, k}] == gamma.gamma[{s, k}] + 1;
                                ok = ok && cactus_phi(moved, s, k, j) == cactus;
                                if (!ok)
                                    fail(report,
                                         "cactus-phi profile=" + str(counts) +
                                             " s=" + std::to_string(s) + " j=" +
                                             std::to_string(j) + " k=" + std::to_string(k),
                                         "round trip", "mismatch");
                            }
                        }
                }

                // Profile-shifting move on the star degree class.
                long long star_count = 0;
                for (const Cactus& cactus : all) {
                    if (!has_star_degrees(cactus, profile, n)) continue;
                    ++star_count;
                    for (int r = 1; r <= d; ++r)
                        for (int s = 1; s <= d; ++s) {
                            if (r == s) continue;
                            if (!in_psi_domain(cactus, r, s)) continue;
                            ++report.cases;
                            Cactus moved = cactus_psi(cactus, r, s);
                            std::vector<int> counts2(counts);
                            --counts2[r - 1];
                            ++counts2[s - 1];
                            Profile profile2(counts2);
                            bool ok = !validate_cactus(moved).has_value();
                            ok = ok && cactus_profile(moved) == profile2;
                            ok = ok && has_star_degrees(moved, profile2, n);
                            ok = ok && in_psi_domain(moved, s, r);
                            ok = ok && cactus_psi(moved, s, r) == cactus;
                            if (!ok)
                                fail(report,
                                     "cactus-psi profile=" + str(counts) + " r=" +
                                         std::to_string(r) + " s=" + std::to_string(s),
                                     "round trip", "mismatch");
                        }
                }
                // The star class realizes the degree formula too.
                ++report.cases;
                CactusDegreeVector star;
                for (int t = 1; t <= d; ++t)
                    for (int i = 1; i <= profile.count(t); ++i)
                        star.gamma[{t, i}] = i == 1 ? n - profile.count(t) + 1 : 1;
                Int star_formula = count_cacti_by_degree(star, d);
                if (star_formula != Int(star_count))
                    fail(report, "star-class profile=" + str(counts), str(star_count),
                         str(star_formula));
            });

            // Terminal class: profile (1, n, ..., n); only the labels of the
            // non-type-1 vertices are free.
            if (n >= 1 && 1 + (d - 1) * n == total_vertices) {
                std::vector<int> counts(d, n);
                counts[0] = 1;
                Profile profile(counts);
                long long star_count = 0;
                enumerate_cacti(d, profile, [&](const Cactus& cactus) {
                    if (has_star_degrees(cactus, profile, n)) ++star_count;
                }, opt.bounds);
                ++report.cases;
                Int expected = int_pow(factorial(n), d - 1);
                if (Int(star_count) != expected)
                    fail(report, "terminal d=" + std::to_string(d) +
                             " n=" + std::to_string(n),
                         str(expected), str(star_count));
            }
        }
    }
    report.seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Suite: plane trees
// ---------------------------------------------------------------------------

std::vector<int> child_distribution(const PlaneTree& tree, int n) {
    std::vector<int> N(n, 0);
    auto rec = [&](auto&& self, const PlaneTree& t) -> void {
        ++N[t.children.size()];
        for (const auto& c : t.children) self(self, c);
    };
    rec(rec, tree);
    return N;
}

VerificationReport suite_plane_trees(const VerifyOptions& opt) {
    Timer timer;
    VerificationReport report{"plane-trees"};
    const int top = std::min(opt.max_vertices + 1, opt.bounds.max_plane_vertices);
    for (int n = 1; n <= top && !saturated(report); ++n) {
        std::map<std::vector<int>, long long> observed;
        enumerate_plane_trees(n, [&](const PlaneTree& tree) {
            ++observed[child_distribution(tree, n)];
        }, opt.bounds);
        // Full sweep: all N with sum N_i = n and sum i N_i = n - 1.
        std::vector<int> N(n, 0);
        auto sweep = [&](auto&& self, int i, int vertices, int edges) -> void {
            if (i == n) {
                if (vertices != n || edges != n - 1) return;
                ++report.cases;
                auto it = observed.find(N);
                long long brute = it == observed.end() ? 0 : it->second;
                Int formula = count_plane_trees(N);
                if (formula != Int(brute))
                    fail(report, "plane n=" + std::to_string(n) + " N=" + str(N),
                         str(brute), str(formula));
                return;
            }
            for (int k = 0; vertices + k <= n && edges + i * k <= n - 1; ++k) {
                N[i] = k;
                self(self, i + 1, vertices + k, edges + i * k);
            }
            N[i] = 0;
        };
        sweep(sweep, 0, 0, 0);
    }
    report.seconds = timer.seconds();
    return report;
}

}  // namespace

VerificationReport verify_unitype(const VerifyOptions& opt) { return suite_unitype(opt); }
VerificationReport verify_multitype_gf(const VerifyOptions& opt) {
    return suite_multitype_gf(opt);
}
VerificationReport verify_determinant(const VerifyOptions& opt) {
    return suite_determinant(opt);
}
VerificationReport verify_forests(const VerifyOptions& opt) { return suite_forests(opt); }
VerificationReport verify_counting(const VerifyOptions& opt) { return suite_counting(opt); }
VerificationReport verify_bijections(const VerifyOptions& opt) {
    return suite_bijections(opt);
}
VerificationReport verify_lagrange(const VerifyOptions& opt) { return suite_lagrange(opt); }
VerificationReport verify_cacti(const VerifyOptions& opt) { return suite_cacti(opt); }
VerificationReport verify_plane_trees(const VerifyOptions& opt) {
    return suite_plane_trees(opt);
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{
        "unitype",   "multitype-gf", "determinant", "forests",    "counting",
        "bijections", "lagrange",    "cacti",       "plane-trees"};
    return names;
}

std::vector<VerificationReport> run_suites(const std::string& name,
                                           const VerifyOptions& opt) {
    using Suite = VerificationReport (*)(const VerifyOptions&);
    static const std::map<std::string, Suite> table{
        {"unitype", verify_unitype},       {"multitype-gf", verify_multitype_gf},
        {"determinant", verify_determinant}, {"forests", verify_forests},
        {"counting", verify_counting},     {"bijections", verify_bijections},
        {"lagrange", verify_lagrange},     {"cacti", verify_cacti},
        {"plane-trees", verify_plane_trees}};
    std::vector<VerificationReport> out;
    if (name == "all") {
        for (const auto& suite_name : verify_suite_names())
            out.push_back(table.at(suite_name)(opt));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    out.push_back(it->second(opt));
    return out;
}

}  // namespace cayley
