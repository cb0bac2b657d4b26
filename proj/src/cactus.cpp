#include "cayley/cactus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace cayley {

namespace {

// Flattened view: gons index their vertices, each vertex keeps the
// clockwise cyclic order of its incident gons.
struct FlatCactus {
    int d = 2;
    int root = 0;
    std::vector<std::vector<int>> gons;  // gon -> vertex index per type slot
    struct Vtx {
        int type = 0;
        int label = 0;
        std::vector<int> ring;  // incident gons, clockwise, up to rotation
        bool alive = true;
    };
    std::vector<Vtx> vertices;

    int find_vertex(int type, int label) const {
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
            if (vertices[v].alive && vertices[v].type == type &&
                vertices[v].label == label)
                return v;
        return -1;
    }
};

int flatten_gon(const Gon& gon, int d, FlatCactus& flat, int attach_vertex,
                int attach_type) {
    if (static_cast<int>(gon.corners.size()) != d)
        throw CactusError("gon does not have d corners");
    const int g = static_cast<int>(flat.gons.size());
    flat.gons.emplace_back(d, -1);
    for (int t = 1; t <= d; ++t) {
        const GonCorner& corner = gon.corners[t - 1];
        if (t == attach_type) {
            if (corner.label != flat.vertices[attach_vertex].label)
                throw CactusError("attachment corner label mismatch");
            if (!corner.children.empty())
                throw CactusError("attachment corner must not carry children");
            flat.gons[g][t - 1] = attach_vertex;
        } else {
            const int v = static_cast<int>(flat.vertices.size());
            flat.vertices.push_back({t, corner.label, {g}, true});
            flat.gons[g][t - 1] = v;
            for (const Gon& child : corner.children) {
                int cg = flatten_gon(child, d, flat, v, t);
                flat.vertices[v].ring.push_back(cg);
            }
        }
    }
    return g;
}

FlatCactus flatten(const Cactus& cactus) {
    if (cactus.d < 2) throw CactusError("cactus needs d >= 2");
    FlatCactus flat;
    flat.d = cactus.d;
    flat.root = flatten_gon(cactus.root, cactus.d, flat, -1, 0);
    // Label sanity: per type, distinct labels covering [n_t].
    std::map<int, std::set<int>> labels;
    std::map<int, int> counts;
    for (const auto& v : flat.vertices) {
        if (!v.alive) continue;
        if (!labels[v.type].insert(v.label).second)
            throw CactusError("duplicate label within a type");
        ++counts[v.type];
    }
    for (const auto& [t, seen] : labels)
        if (*seen.begin() != 1 || *seen.rbegin() != counts[t])
            throw CactusError("labels of a type must cover 1..n_t");
    return flat;
}

Gon unflatten_gon(const FlatCactus& flat, int g, int attach_type,
                  std::set<int>& anchored) {
    Gon out;
    out.corners.resize(flat.d);
    for (int t = 1; t <= flat.d; ++t) {
        const int v = flat.gons[g][t - 1];
        out.corners[t - 1].label = flat.vertices[v].label;
        if (t == attach_type) continue;  // shared corner: label only
        if (!anchored.insert(v).second)
            throw CactusError("vertex anchored twice");
        const auto& ring = flat.vertices[v].ring;
        auto here = std::find(ring.begin(), ring.end(), g);
        if (here == ring.end()) throw CactusError("inconsistent incidence ring");
        const int pos = static_cast<int>(here - ring.begin());
        for (std::size_t k = 1; k < ring.size(); ++k) {
            int child = ring[(pos + k) % ring.size()];
            out.corners[t - 1].children.push_back(
                unflatten_gon(flat, child, t, anchored));
        }
    }
    return out;
}

Cactus unflatten(const FlatCactus& flat) {
    std::set<int> anchored;
    Cactus out{flat.d, unflatten_gon(flat, flat.root, 0, anchored)};
    return out;
}

// Gons along the tree path between two vertices, via the vertex-gon
// incidence tree. First entry touches `from`, last touches `to`.
std::vector<int> gon_chain(const FlatCactus& flat, int from, int to) {
    const int V = static_cast<int>(flat.vertices.size());
    const int G = static_cast<int>(flat.gons.size());
    // node ids: vertices 0..V-1, gons V..V+G-1
    std::vector<std::vector<int>> adj(V + G);
    for (int g = 0; g < G; ++g)
        for (int v : flat.gons[g]) {
            adj[V + g].push_back(v);
            adj[v].push_back(V + g);
        }
    std::vector<int> prev(V + G, -1);
    std::vector<int> queue{from};
    prev[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]]) {
            if (prev[w] >= 0) continue;
            prev[w] = queue[head];
            queue.push_back(w);
        }
    if (prev[to] < 0) throw CactusError("vertices are not connected");
    std::vector<int> chain;
    for (int cur = to; cur != from; cur = prev[cur])
        if (cur >= V) chain.push_back(cur - V);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

int ring_successor(const FlatCactus::Vtx& v, int gon) {
    auto it = std::find(v.ring.begin(), v.ring.end(), gon);
    if (it == v.ring.end()) throw CactusError("gon not incident to vertex");
    return v.ring[(it - v.ring.begin() + 1) % v.ring.size()];
}

void ring_insert_after(std::vector<int>& ring, int after, int gon) {
    auto it = std::find(ring.begin(), ring.end(), after);
    if (it == ring.end()) throw CactusError("gon not incident to vertex");
    ring.insert(it + 1, gon);
}

void ring_erase(std::vector<int>& ring, int gon) {
    auto it = std::find(ring.begin(), ring.end(), gon);
    if (it == ring.end()) throw CactusError("gon not incident to vertex");
    ring.erase(it);
}

}  // namespace

std::optional<std::string> validate_cactus(const Cactus& cactus) {
    try {
        flatten(cactus);
    } catch (const CactusError& err) {
        return err.what();
    }
    return std::nullopt;
}

int cactus_size(const Cactus& cactus) {
    return static_cast<int>(flatten(cactus).gons.size());
}

Profile cactus_profile(const Cactus& cactus) {
    FlatCactus flat = flatten(cactus);
    std::vector<int> counts(flat.d, 0);
    for (const auto& v : flat.vertices)
        if (v.alive) ++counts[v.type - 1];
    return Profile(counts);
}

CactusDegreeVector cactus_degree_vector(const Cactus& cactus) {
    FlatCactus flat = flatten(cactus);
    CactusDegreeVector out;
    for (const auto& v : flat.vertices)
        if (v.alive)
            out.gamma[{v.type, v.label}] = static_cast<int>(v.ring.size());
    return out;
}

namespace {

// Unlabeled tree-of-gons shape: per corner, an ordered child sequence.
struct Shape {
    std::vector<std::vector<Shape>> corners;
};

// Shapes with n gons whose corner of type `skip` must stay empty: a gon
// attached at a type-t vertex keeps all further gons of that vertex in its
// parent's corner list, never in its own. skip = 0 for the root gon.
std::vector<Shape> shapes_of_size(int n, int d, int skip);

// Ordered sequences of shapes, each attached at a type-t vertex, totaling
// k gons.
std::vector<std::vector<Shape>> shape_seqs(int k, int d, int t) {
    std::vector<std::vector<Shape>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= k; ++first)
        for (const auto& head : shapes_of_size(first, d, t))
            for (const auto& tail : shape_seqs(k - first, d, t)) {
                std::vector<Shape> seq{head};
                seq.insert(seq.end(), tail.begin(), tail.end());
                out.push_back(std::move(seq));
            }
    return out;
}

std::vector<Shape> shapes_of_size(int n, int d, int skip) {
    std::vector<Shape> out;
    std::vector<std::vector<Shape>> corners(d);
    auto rec = [&](auto&& self, int t, int remaining) -> void {
        if (t > d) {
            if (remaining == 0) out.push_back(Shape{corners});
            return;
        }
        if (t == skip) {
            self(self, t + 1, remaining);
            return;
        }
        for (int here = 0; here <= remaining; ++here)
            for (const auto& seq : shape_seqs(here, d, t)) {
                corners[t - 1] = seq;
                self(self, t + 1, remaining - here);
            }
        corners[t - 1].clear();
    };
    rec(rec, 1, n - 1);
    return out;
}

void count_shape_vertices(const Shape& shape, int d, int attach_type,
                          std::vector<int>& counts) {
    for (int t = 1; t <= d; ++t) {
        if (t != attach_type) ++counts[t - 1];
        for (const auto& child : shape.corners[t - 1])
            count_shape_vertices(child, d, t, counts);
    }
}

// Assigns labels (per-type sequences consumed in traversal order) and
// materializes the nested gon structure.
Gon materialize(const Shape& shape, int d, int attach_type, int attach_label,
                std::vector<std::vector<int>>& remaining) {
    Gon out;
    out.corners.resize(d);
    for (int t = 1; t <= d; ++t) {
        int label;
        if (t == attach_type) {
            label = attach_label;
        } else {
            label = remaining[t - 1].back();
            remaining[t - 1].pop_back();
        }
        out.corners[t - 1].label = label;
        for (const auto& child : shape.corners[t - 1])
            out.corners[t - 1].children.push_back(
                materialize(child, d, t, label, remaining));
    }
    return out;
}

}  // namespace

void enumerate_cacti(int d, const Profile& profile,
                     const std::function<void(const Cactus&)>& visit,
                     const EnumBounds& bounds) {
    if (d < 2) throw CactusError("cacti need d >= 2");
    if (d > 4) throw SizeError("cactus type count exceeds bound");
    if (profile.type_count() != d)
        throw CactusError("profile type count must equal d");
    const int total = profile.vertex_count();
    if ((total - 1) % (d - 1) != 0)
        throw CactusError("profile has no integral cactus size");
    const int n = (total - 1) / (d - 1);
    if (n > bounds.max_cactus_size) throw SizeError("cactus size exceeds bound");
    for (const auto& shape : shapes_of_size(n, d, 0)) {
        std::vector<int> counts(d, 0);
        count_shape_vertices(shape, d, 0, counts);
        if (counts != profile.counts()) continue;
        // One label permutation per type; odometer over types.
        std::vector<std::vector<int>> perms(d);
        for (int t = 1; t <= d; ++t) {
            perms[t - 1].resize(profile.count(t));
            for (int i = 0; i < profile.count(t); ++i) perms[t - 1][i] = i + 1;
        }
        while (true) {
            std::vector<std::vector<int>> remaining(d);
            for (int t = 0; t < d; ++t)
                remaining[t].assign(perms[t].rbegin(), perms[t].rend());
            visit(Cactus{d, materialize(shape, d, 0, 0, remaining)});
            int t = d - 1;
            while (t >= 0 && !std::next_permutation(perms[t].begin(), perms[t].end()))
                --t;
            if (t < 0) break;
        }
    }
}

Int count_cacti_by_degree(const CactusDegreeVector& gamma, int d) {
    if (d < 2) throw CactusError("cacti need d >= 2");
    std::vector<int> counts(d, 0);
    std::vector<long long> sums(d, 0);
    std::map<int, std::set<int>> labels;
    for (const auto& [v, deg] : gamma.gamma) {
        if (v.type < 1 || v.type > d) throw CactusError("vertex type out of range");
        if (!labels[v.type].insert(v.label).second)
            throw CactusError("duplicate vertex in degree vector");
        if (deg < 1) return 0;
        ++counts[v.type - 1];
        sums[v.type - 1] += deg;
    }
    for (int t = 1; t <= d; ++t) {
        if (counts[t - 1] == 0) return 0;
        if (*labels[t].begin() != 1 || *labels[t].rbegin() != counts[t - 1])
            throw CactusError("labels of a type must cover 1..n_t");
    }
    const long long n = sums[0];
    for (long long s : sums)
        if (s != n) return 0;
    long long total = 0;
    for (int c : counts) total += c;
    if (total - 1 != (d - 1) * n) return 0;
    Int result = int_pow(Int(n), d - 1);
    for (int c : counts) result *= factorial(c - 1);
    return result;
}

Int count_cacti_total(const Profile& profile, int d) {
    if (d < 2) throw CactusError("cacti need d >= 2");
    if (profile.type_count() != d)
        throw CactusError("profile type count must equal d");
    const int total = profile.vertex_count();
    if ((total - 1) % (d - 1) != 0) return 0;
    const int n = (total - 1) / (d - 1);
    Int result = int_pow(Int(n), d - 1);
    for (int t = 1; t <= d; ++t) {
        result *= binomial(n - 1, profile.count(t) - 1);
        result *= factorial(profile.count(t) - 1);
    }
    return result;
}

Cactus cactus_phi(const Cactus& cactus, int s, int j, int k) {
    if (j == k) throw CactusError("labels j and k must differ");
    FlatCactus flat = flatten(cactus);
    if (s < 1 || s > flat.d) throw CactusError("type out of range");
    const int vj = flat.find_vertex(s, j);
    const int vk = flat.find_vertex(s, k);
    if (vj < 0 || vk < 0) throw CactusError("vertex label out of range");
    if (flat.vertices[vj].ring.size() < 2)
        throw CactusError("source vertex has degree 1");
    auto chain = gon_chain(flat, vj, vk);
    const int g_j = chain.front();
    const int g_k = chain.back();
    const int moved = ring_successor(flat.vertices[vj], g_j);
    ring_erase(flat.vertices[vj].ring, moved);
    if (flat.gons[moved][s - 1] != vj) throw CactusError("inconsistent corner");
    flat.gons[moved][s - 1] = vk;
    ring_insert_after(flat.vertices[vk].ring, g_k, moved);
    return unflatten(flat);
}

namespace {

// Checks the gamma*(n) degree pattern: (t,1) has degree n - n_t + 1,
// everything else degree 1.
bool is_star_degree_vector(const FlatCactus& flat) {
    const int n = static_cast<int>(flat.gons.size());
    std::vector<int> counts(flat.d, 0);
    for (const auto& v : flat.vertices)
        if (v.alive) ++counts[v.type - 1];
    for (const auto& v : flat.vertices) {
        if (!v.alive) continue;
        const int expected = v.label == 1 ? n - counts[v.type - 1] + 1 : 1;
        if (static_cast<int>(v.ring.size()) != expected) return false;
    }
    return true;
}

struct PsiSite {
    int vr, vs;      // vertices (r,1), (s,1)
    int g_r, g_s;    // chain endpoint gons
    int moved;       // g_s', the gon to transfer
    int retired;     // the degree-1 type-r vertex on `moved`
};

std::optional<PsiSite> psi_site(const FlatCactus& flat, int r, int s,
                                std::string* reason) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return std::nullopt;
    };
    if (r < 1 || r > flat.d || s < 1 || s > flat.d || r == s)
        throw CactusError("types out of range");
    if (!is_star_degree_vector(flat)) return fail("degree vector is not gamma*(n)");
    const int n = static_cast<int>(flat.gons.size());
    std::vector<int> counts(flat.d, 0);
    for (const auto& v : flat.vertices)
        if (v.alive) ++counts[v.type - 1];
    if (counts[r - 1] <= 1) return fail("n_r must exceed 1");
    if (counts[s - 1] >= n) return fail("n_s must be below n");
    PsiSite site{};
    site.vr = flat.find_vertex(r, 1);
    site.vs = flat.find_vertex(s, 1);
    auto chain = gon_chain(flat, site.vr, site.vs);
    site.g_r = chain.front();
    site.g_s = chain.back();
    site.moved = ring_successor(flat.vertices[site.vs], site.g_s);
    site.retired = flat.gons[site.moved][r - 1];
    if (flat.vertices[site.retired].label != counts[r - 1])
        return fail("transferred gon's type-r vertex must carry label n_r");
    if (flat.vertices[site.retired].ring.size() != 1)
        return fail("transferred gon's type-r vertex must have degree 1");
    return site;
}

}  // namespace

bool in_psi_domain(const Cactus& cactus, int r, int s) {
    FlatCactus flat = flatten(cactus);
    return psi_site(flat, r, s, nullptr).has_value();
}

Cactus cactus_psi(const Cactus& cactus, int r, int s) {
    FlatCactus flat = flatten(cactus);
    std::string reason;
    auto site = psi_site(flat, r, s, &reason);
    if (!site) throw CactusError("psi precondition: " + reason);
    const int n_s = [&] {
        int c = 0;
        for (const auto& v : flat.vertices)
            if (v.alive && v.type == s) ++c;
        return c;
    }();
    ring_erase(flat.vertices[site->vs].ring, site->moved);
    // Fresh type-s vertex takes over the detached corner with the top label.
    const int fresh = static_cast<int>(flat.vertices.size());
    flat.vertices.push_back({s, n_s + 1, {site->moved}, true});
    if (flat.gons[site->moved][s - 1] != site->vs)
        throw CactusError("inconsistent corner");
    flat.gons[site->moved][s - 1] = fresh;
    // The degree-1 type-r vertex merges into (r,1) and its label retires.
    flat.vertices[site->retired].alive = false;
    flat.gons[site->moved][r - 1] = site->vr;
    ring_insert_after(flat.vertices[site->vr].ring, site->g_r, site->moved);
    return unflatten(flat);
}

namespace {

nlohmann::json gon_to_json(const Gon& gon) {
    nlohmann::json vertices = nlohmann::json::array();
    int type = 1;
    for (const auto& corner : gon.corners) {
        nlohmann::json children = nlohmann::json::array();
        for (const auto& child : corner.children) children.push_back(gon_to_json(child));
        vertices.push_back({{"type", type}, {"label", corner.label},
                            {"children", std::move(children)}});
        ++type;
    }
    return {{"vertices", std::move(vertices)}};
}

Gon gon_from_json(const nlohmann::json& j) {
    Gon out;
    int expected = 1;
    for (const auto& entry : j.at("vertices")) {
        if (entry.at("type").get<int>() != expected++)
            throw CactusError("gon corners must list types 1..d in order");
        GonCorner corner;
        corner.label = entry.at("label").get<int>();
        for (const auto& child : entry.at("children"))
            corner.children.push_back(gon_from_json(child));
        out.corners.push_back(std::move(corner));
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const Cactus& cactus) {
    return {{"d", cactus.d}, {"root", gon_to_json(cactus.root)}};
}

Cactus cactus_from_json(const nlohmann::json& j) {
    Cactus out{j.at("d").get<int>(), gon_from_json(j.at("root"))};
    if (auto err = validate_cactus(out)) throw CactusError(*err);
    return out;
}

}  // namespace cayley
