#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radhom/chainhom.hpp"
#include "radhom/errors.hpp"
#include "radhom/finmodule.hpp"
#include "radhom/semicore.hpp"

namespace radhom {

/// R(P) is a retract of a free semimodule: phi psi = id.
struct RadicalProjectiveCertificate {
    ModulePtr module;
    RetractWitness witness;

    int basis_size() const { return witness.free.rank; }
};

struct ProjectivityVerdict {
    std::optional<RadicalProjectiveCertificate> certificate;
    RetractSearch search;

    bool certified() const { return certificate.has_value(); }
};

/// Absence of a certificate means "not found within the bound", not "not
/// projective"; see search.attempts for how each basis size ended.
ProjectivityVerdict is_radical_projective(const ModulePtr& p, int max_basis, const SearchOptions& opts = {});

/// Checks phi psi = id pointwise, phi surjective, psi injective.
Report certificate_violations(const RadicalProjectiveCertificate& cert);

/// P_0 <- P_1 <- ... <- P_k with augmentation P_0 -> M.
struct RadicalResolution {
    ChainComplex complex;
    ModuleHom augmentation;

    const ModulePtr& target() const { return augmentation.target(); }
    int length() const { return complex.top(); }
};

/// Shape checks only; throws ShapeError if the augmentation does not start
/// at P_0.
RadicalResolution make_resolution(ChainComplex complex, ModuleHom augmentation);

struct ResolutionReport {
    Report defects;  // exactness, surjectivity, homology
    Report notes;    // projectivity not certified within the bound
    std::vector<ProjectivityVerdict> verdicts;  // per P_i

    bool ok() const { return defects.ok(); }
};

/// Exactness of ... -> R(P_1) -> R(P_0) -> R(M) -> 0 at every spot, R(g)
/// surjective, H_n(R(P)) one class for n >= 1, and a projectivity search for
/// every P_i. A missing certificate is a note, not a defect.
ResolutionReport verify_radical_resolution(const RadicalResolution& r, int max_basis = 3,
                                           const SearchOptions& opts = {});

struct LemmaProResult {
    std::optional<SemiHom> beta;
    std::optional<SemiHom> beta_prime;
    std::vector<Elem> kernel_witnesses;        // N_gamma per basis element
    std::vector<Elem> kernel_witnesses_prime;  // N'_gamma
    Report violations;
};

/// For R(f) steady and R(f) alpha = R(f) alpha' with alpha, alpha' : R(P) ->
/// R(M): per basis element gamma picks N_gamma, N'_gamma in ker R(f) with
/// alpha phi(gamma) + N_gamma = alpha' phi(gamma) + N'_gamma (zero first,
/// then canonical order), extends to lambda, lambda' and returns
/// beta = lambda psi, beta' = lambda' psi. Both identities are checked.
/// PreconditionError if R(f) is not steady or the composites differ.
LemmaProResult lemma_pro_witnesses(const ModuleHom& f, const RadicalProjectiveCertificate& cert, const SemiHom& alpha,
                                   const SemiHom& alpha_prime);

/// Same construction with an arbitrary semimodule hom in place of R(f).
LemmaProResult lemma_pro_witnesses(const SemiHom& rf, const RetractWitness& retract, const SemiHom& alpha,
                                   const SemiHom& alpha_prime);

struct LiftOptions {
    std::uint64_t seed = 0;  // 0: identity first where possible, then canonical order; else shuffled
    SearchOptions search;
};

struct LiftResult {
    std::optional<SemiComplexMap> map;
    Report violations;
};

/// A map of complexes R(P) -> R(P') with R(g) R(aug) = R(aug') phi_0 and
/// phi_{n-1} R(f_n) = R(f'_n) phi_n, found degree by degree. PreconditionError
/// unless both resolutions are exact and g : M -> M'.
LiftResult lift_map(const ModuleHom& g, const RadicalResolution& r, const RadicalResolution& r2,
                    const LiftOptions& opts = {});

struct HomotopyConstruction {
    std::optional<HomotopyPair> pair;
    Report violations;
    std::vector<std::string> notes;  // degrees where a search replaced a certificate
};

/// Builds (s, t) between two lifts following the inductive construction:
/// kernel witnesses (lemma_pro_witnesses) at each degree, then factoring through R(f'_{n+1}).
/// Degrees without a projectivity certificate fall back to a search over
/// enumerated homs. PreconditionError unless both maps are lifts of the
/// same R(g) and every R(f'_n), including the augmentation, is steady.
HomotopyConstruction homotopy_between_lifts(const SemiComplexMap& phi, const SemiComplexMap& psi,
                                            const RadicalResolution& r, const RadicalResolution& r2,
                                            int max_basis = 3, const SearchOptions& opts = {});

struct H0Report {
    int h0_classes = 0;
    int quotient_classes = 0;  // R(P_0) / ker R(g)
    int target_size = 0;       // |R(M)|
    bool h0_iso_quotient = false;
    bool h0_iso_target = false;
    bool quotient_iso_target = false;
    bool h0_iso_p0 = false;
};

/// Compares H_0(R(P)), R(P_0)/ker R(g), R(M) and R(P_0) up to isomorphism.
H0Report resolution_h0_check(const RadicalResolution& r, const SearchOptions& opts = {});

}  // namespace radhom
