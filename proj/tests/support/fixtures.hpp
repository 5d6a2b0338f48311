#pragma once

// Shared instances for the unit tests and the acceptance suite.

#include <random>
#include <vector>

#include "radhom/chainhom.hpp"
#include "radhom/resolutions.hpp"

namespace fixtures {

using namespace radhom;
using Rng = std::mt19937_64;

RingPtr zn(int n);
/// F^dim, the zero module when dim = 0.
ModulePtr vec(const RingPtr& field, int dim);

/// At least 20 modules, |M| <= 64 over rings with |R| <= 16, including Z4
/// over Z4 and F2^2 over F2.
std::vector<ModulePtr> module_corpus();

/// One line W in V = F^2 with the data of the two resolution readings.
struct LineData {
    RingPtr field;
    ModulePtr v;
    SubmoduleSet line;
    SubmoduleAsModule w;
    QuotientModule q;
    RadicalResolution primary;  // P_0 = V, P_1 = W, augmentation V -> V/W
    RadicalResolution literal;  // P_0 = V/W, P_1 = V, P_2 = W over M = 0
    ChainComplex sequence;      // V/W <- V <- W as a complex
};

/// Every line of F_p^2.
std::vector<LineData> lines(int p);

/// Mapping cones Y -> C(u) -> X[-1] over F2 with zero differentials on X
/// and Y; u surjective above degree 0 so that all three hypotheses hold.
struct Cone {
    std::vector<int> dims_y, dims_x;
    std::vector<ModuleHom> u;
    ShortExactSeq ses;
};
Cone make_cone(const std::vector<int>& dims_y, const std::vector<int>& dims_x, std::vector<ModuleHom> u);
std::vector<Cone> cone_corpus(Rng& rng);

/// 0 -> 0 -> C -> C -> 0 for radical acyclic C over F2: two-by-identity,
/// F2^2 by identity, and each line sequence V/W <- V <- W.
std::vector<ShortExactSeq> split_sequences();

/// Ladder from cone(u) to cone(a u) with vertical maps a on Y, (a, id) on
/// the cone and id on X[-1].
struct Ladder {
    Cone top, bottom;
    ComplexMap beta_left, beta, beta_right;
};
Ladder make_ladder(const Cone& c, const std::vector<ModuleHom>& a);

/// Random hom, uniformly among all homs.
ModuleHom random_hom(Rng& rng, const ModulePtr& s, const ModulePtr& t);

/// Random complex of the given top degree over small modules (|M| <= 16).
ChainComplex random_complex(Rng& rng, const RingPtr& ring, int top);
/// Random chain map, the zero map if repeated attempts find none.
ComplexMap random_chain_map(Rng& rng, const ChainComplex& s, const ChainComplex& t);
/// psi = phi + f' s + s f for the given s.
ComplexMap homotopic_map(const ComplexMap& phi, const ModuleHomotopy& s);
ModuleHomotopy random_homotopy(Rng& rng, const ChainComplex& s, const ChainComplex& t);

std::vector<RingPtr> small_rings();

}  // namespace fixtures
