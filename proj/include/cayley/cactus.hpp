#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cayley/enumerate.hpp"
#include "cayley/tree.hpp"

namespace cayley {

struct CactusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rooted planar d-cactus as a plane tree of d-gons. Each gon lists its d
// corners in clockwise type order 1..d. The children recorded at a corner
// are the gons attached at that vertex, in clockwise order after the gon
// nearest the root; the corner a child is attached by repeats the shared
// vertex's label and carries no children of its own.
struct Gon;
struct GonCorner {
    int label = 0;
    std::vector<Gon> children;
    friend bool operator==(const GonCorner&, const GonCorner&);
};
struct Gon {
    std::vector<GonCorner> corners;  // exactly d, types 1..d clockwise
    friend bool operator==(const Gon&, const Gon&) = default;
};
inline bool operator==(const GonCorner& a, const GonCorner& b) {
    return a.label == b.label && a.children == b.children;
}

struct Cactus {
    int d = 2;
    Gon root;
    friend bool operator==(const Cactus&, const Cactus&) = default;
};

// Degree (number of incident gons) per labeled vertex.
struct CactusDegreeVector {
    std::map<VertexId, int> gamma;
    friend bool operator==(const CactusDegreeVector&, const CactusDegreeVector&) = default;
};

std::optional<std::string> validate_cactus(const Cactus& cactus);
int cactus_size(const Cactus& cactus);          // number of gons
Profile cactus_profile(const Cactus& cactus);   // vertex counts per type
CactusDegreeVector cactus_degree_vector(const Cactus& cactus);

// Every rooted vertex-labeled planar d-cactus with the given profile,
// exactly once, in deterministic order.
void enumerate_cacti(int d, const Profile& profile,
                     const std::function<void(const Cactus&)>& visit,
                     const EnumBounds& bounds = {});

// n^{d-1} * prod (n_t - 1)! when the degree vector is admissible, else 0.
Int count_cacti_by_degree(const CactusDegreeVector& gamma, int d);
Int count_cacti_total(const Profile& profile, int d);

// Degree-shifting move: re-glues the gon clockwise-after the chain gon at
// (s,j) onto (s,k). Requires degree(s,j) > 1; the (s,k,j) move inverts it.
Cactus cactus_phi(const Cactus& cactus, int s, int j, int k);

// Profile-shifting move on the star degree class: moves the marked gon
// from (s,1) to (r,1), retiring the degree-1 type-r vertex labeled n_r and
// introducing (s, n_s+1). The (s,r) move inverts it.
Cactus cactus_psi(const Cactus& cactus, int r, int s);

// True when the cactus has degree vector gamma*(n) (vertex (t,1) of degree
// n - n_t + 1, every other vertex of degree 1) and the type-r vertex on the
// gon the (r -> s) move would transfer carries the top label n_r.
bool in_psi_domain(const Cactus& cactus, int r, int s);

nlohmann::json to_json(const Cactus& cactus);
Cactus cactus_from_json(const nlohmann::json& j);

}  // namespace cayley
