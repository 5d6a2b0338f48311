#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radhom/errors.hpp"
#include "radhom/finmodule.hpp"
#include "radhom/radfunctor.hpp"
#include "radhom/semicore.hpp"

namespace radhom {

// ---------------------------------------------------------------------------
// Module level

/// M_0 <- M_1 <- ... <- M_top. diffs[n-1] is f_n : M_n -> M_{n-1}; the map
/// M_0 -> 0 is implicit. Degrees above top are zero modules.
struct ChainComplex {
    std::vector<ModulePtr> modules;
    std::vector<ModuleHom> diffs;

    int top() const { return static_cast<int>(modules.size()) - 1; }
    const ModulePtr& module(int n) const { return modules[static_cast<std::size_t>(n)]; }
    const ModuleHom& diff(int n) const { return diffs[static_cast<std::size_t>(n - 1)]; }
    const RingPtr& ring() const { return modules.front()->ring(); }
};

/// Throws ShapeError on mismatched endpoints and AxiomError naming the
/// degree where f_n f_{n+1} is nonzero.
ChainComplex make_complex(std::vector<ModulePtr> modules, std::vector<ModuleHom> diffs);

/// Appends zero modules up to the given top degree.
ChainComplex pad_complex(const ChainComplex& c, int top);

/// phi_n : M_n -> M'_n with f'_n phi_n = phi_{n-1} f_n.
struct ComplexMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<ModuleHom> components;

    int top() const { return static_cast<int>(components.size()) - 1; }
    const ModuleHom& at(int n) const { return components[static_cast<std::size_t>(n)]; }
};

/// Pads both complexes to components.size() - 1. Throws AxiomError naming
/// the degree of the first square that fails to commute.
ComplexMap make_complex_map(const ChainComplex& source, const ChainComplex& target, std::vector<ModuleHom> components);

ComplexMap identity_map(const ChainComplex& c);
ComplexMap zero_map(const ChainComplex& source, const ChainComplex& target);
/// g after f.
ComplexMap compose_maps(const ComplexMap& g, const ComplexMap& f);

/// s_n : M_n -> M'_{n+1} for n = 0..top.
using ModuleHomotopy = std::vector<ModuleHom>;

/// phi_n + s_{n-1} f_n + f'_{n+1} s_n = psi_n at every degree.
Report module_homotopy_violations(const ComplexMap& phi, const ComplexMap& psi, const ModuleHomotopy& s);
inline bool is_module_homotopy(const ComplexMap& phi, const ComplexMap& psi, const ModuleHomotopy& s) {
    return module_homotopy_violations(phi, psi, s).ok();
}

/// Zero homotopy of the right shape for maps between the two complexes.
ModuleHomotopy zero_homotopy(const ChainComplex& source, const ChainComplex& target);

// ---------------------------------------------------------------------------
// Semimodule level

struct SemiComplex {
    std::vector<SemimodulePtr> objects;
    std::vector<SemiHom> diffs;

    int top() const { return static_cast<int>(objects.size()) - 1; }
    const SemimodulePtr& object(int n) const { return objects[static_cast<std::size_t>(n)]; }
    const SemiHom& diff(int n) const { return diffs[static_cast<std::size_t>(n - 1)]; }
};

/// Throws AxiomError at the first degree where consecutive differentials do
/// not compose to zero.
SemiComplex make_semi_complex(std::vector<SemimodulePtr> objects, std::vector<SemiHom> diffs);
SemiComplex pad_semi_complex(const SemiComplex& c, int top);

/// R applied degreewise. Throws InternalConsistencyError if a composite of
/// R-differentials is nonzero.
SemiComplex apply_radical(const ChainComplex& c);

struct SemiComplexMap {
    SemiComplex source;
    SemiComplex target;
    std::vector<SemiHom> components;

    int top() const { return static_cast<int>(components.size()) - 1; }
    const SemiHom& at(int n) const { return components[static_cast<std::size_t>(n)]; }
};

SemiComplexMap make_semi_complex_map(const SemiComplex& source, const SemiComplex& target,
                                     std::vector<SemiHom> components);
SemiComplexMap apply_radical(const ComplexMap& phi);
SemiComplexMap semi_identity_map(const SemiComplex& c);

/// s_n, t_n : C_n -> C'_{n+1} for n = 0..top.
struct HomotopyPair {
    std::vector<SemiHom> s;
    std::vector<SemiHom> t;
};

/// phi_n + s_{n-1} f_n + f'_{n+1} s_n = psi_n + t_{n-1} f_n + f'_{n+1} t_n,
/// pointwise at every degree. Witnesses are "degree n at x".
Report homotopy_pair_violations(const SemiComplexMap& phi, const SemiComplexMap& psi, const HomotopyPair& st);
inline bool is_homotopy_pair(const SemiComplexMap& phi, const SemiComplexMap& psi, const HomotopyPair& st) {
    return homotopy_pair_violations(phi, psi, st).ok();
}

HomotopyPair zero_homotopy_pair(const SemiComplex& source, const SemiComplex& target);

// ---------------------------------------------------------------------------
// Homology

/// Z_n = ker d_n (everything at n = 0), B_n = im d_{n+1} ({zero} at the top),
/// H_n = Z_n / B_n as a Bourne quotient of Z_n viewed as a semimodule.
struct HomologyData {
    int degree = 0;
    SubSemimodule cycles;
    SubSemimodule boundaries;
    Restriction cycle_module;
    BourneQuotient quotient;

    int class_count() const { return quotient.class_count(); }
    const SemimodulePtr& carrier() const { return quotient.quotient; }
    /// Class of a cycle given by its index in the complex object.
    int class_of(Elem cycle) const;
    /// Least cycle (as an object element) of a class.
    Elem representative(int cls) const;
};

HomologyData homology(const SemiComplex& c, int n);

/// H_n(phi): [N] -> [phi_n(N)]. Throws InternalConsistencyError if phi_n
/// leaves the cycles or the result depends on the representative.
SemiHom induced_homology_map(const SemiComplexMap& phi, const HomologyData& source, const HomologyData& target);
SemiHom induced_homology_map(const SemiComplexMap& phi, int n);

/// Every H_n(R(c)) has exactly one class.
bool is_radical_acyclic(const ChainComplex& c);
bool is_acyclic(const SemiComplex& c);

struct HomotopyTransport {
    HomotopyPair pair;           // (R(s), R(0))
    Report pair_report;          // homotopy pair identity
    Report homology_report;      // H_n(R(phi)) = H_n(R(psi))
    bool ok() const { return pair_report.ok() && homology_report.ok(); }
};

/// Given phi ~_s psi at module level (checked; PreconditionError if not),
/// builds (R(s), R(0)) and reports both conclusions separately.
HomotopyTransport radical_homotopy_transport(const ComplexMap& phi, const ComplexMap& psi, const ModuleHomotopy& s);

struct HomotopySearch {
    std::optional<HomotopyPair> pair;
    bool bound_exceeded = false;
};

/// Degree-by-degree search over enumerated homs, zero first and then
/// canonical order; the bound counts candidate (s_n, t_n) pairs.
HomotopySearch find_homotopy_pair(const SemiComplexMap& phi, const SemiComplexMap& psi, const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Short exact sequences, connecting maps, long exact sequences

/// M' --phi--> M --psi--> M'' of complexes, padded to a common top.
struct ShortExactSeq {
    ComplexMap phi;
    ComplexMap psi;

    const ChainComplex& left() const { return phi.source; }
    const ChainComplex& middle() const { return phi.target; }
    const ChainComplex& right() const { return psi.target; }
    int top() const { return phi.top(); }
};

/// Throws ShapeError unless psi starts where phi ends.
ShortExactSeq make_short_exact_seq(const ComplexMap& phi, const ComplexMap& psi);

/// Row exactness of 0 -> R(M'_n) -> R(M_n) -> R(M''_n) -> 0 at every
/// degree, and for n >= 1: im R(phi_n) in im R(f_{n+1}), im R(f''_n)
/// subtractive, R(psi_n) steady. Witness text starts with "degree n".
Report check_snake_hypotheses(const ShortExactSeq& ses);

/// Same checks, but the three degree-n hypotheses are reported at n = 0 too.
/// Rows still required at every degree.
Report snake_hypotheses_all_degrees(const ShortExactSeq& ses);

struct ConnectingMap {
    int degree = 0;
    std::optional<SemiHom> map;  // H_n(R(M'')) -> H_{n-1}(R(M'))
    Report violations;           // choice dependence, non-hom
    Report defects;              // missing lift or preimage
};

/// alpha_n for 1 <= n <= top by the chase: lift through R(psi_n), apply
/// R(f_n), pull back through R(phi_{n-1}). Every alternative choice of
/// representative, lift and preimage is tried. PreconditionError if the
/// snake hypotheses fail.
ConnectingMap connecting_homomorphism(const ShortExactSeq& ses, int n);

struct LesMap {
    std::string label;
    SemiHom map;
};

struct LongExactSequence {
    std::vector<LesMap> maps;  // in sequence order, starting at the top degree
    std::vector<ConnectingMap> connecting;
    Report exactness;
    Report violations;
    Report defects;
    bool ok() const { return exactness.ok() && violations.ok() && defects.ok(); }
};

LongExactSequence long_exact_sequence(const ShortExactSeq& ses);

/// Rows ses and ses2 with vertical maps beta' (left), beta (middle), beta''
/// (right). PreconditionError unless the R-image diagram commutes and both
/// rows satisfy the snake hypotheses; otherwise reports every ladder square
/// of the long exact sequences that fails to commute.
Report naturality_check(const ShortExactSeq& top_row, const ShortExactSeq& bottom_row, const ComplexMap& beta_left,
                        const ComplexMap& beta, const ComplexMap& beta_right);

}  // namespace radhom
