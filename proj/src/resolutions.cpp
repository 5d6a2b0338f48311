#include "radhom/resolutions.hpp"

#include <algorithm>
#include <random>

namespace radhom {

namespace {

std::size_t idx(int e) { return static_cast<std::size_t>(e); }

std::string at_degree(int n) { return "degree " + std::to_string(n); }

bool same_maps(const SemiHom& a, const SemiHom& b) { return a.map() == b.map(); }

// Zero hom first, then the rest in canonical order.
std::vector<SemiHom> zero_first(std::vector<SemiHom> homs, const SemimodulePtr& src, const SemimodulePtr& tgt) {
    auto zero = semi_zero(src, tgt);
    std::erase_if(homs, [&](const SemiHom& h) { return h == zero; });
    homs.insert(homs.begin(), std::move(zero));
    return homs;
}

SemimodulePtr object_or_zero(const SemiComplex& c, int n) {
    return n <= c.top() ? c.object(n) : zero_semimodule(c.object(0)->scalars());
}

// d_{n+1} : C_{n+1} -> C_n, a zero map from a zero object past the top.
SemiHom incoming(const SemiComplex& c, int n) {
    return n < c.top() ? c.diff(n + 1) : semi_zero(zero_semimodule(c.object(0)->scalars()), c.object(n));
}

Report exactness_defects(const RadicalResolution& r) {
    Report rep;
    auto rc = apply_radical(r.complex);
    auto ra = radical_hom(r.augmentation);
    if (!is_surjective(ra)) rep.add("R(g) is surjective", "");
    for (int n = 0; n <= rc.top(); ++n) {
        const auto next = n == 0 ? ra : rc.diff(n);
        if (!(image(incoming(rc, n)).elements == kernel(next).elements))
            rep.add("exact at R(P_n)", at_degree(n));
    }
    for (int n = 1; n <= rc.top(); ++n)
        if (homology(rc, n).class_count() != 1) rep.add("H_n(R(P)) has one class", at_degree(n));
    return rep;
}

std::optional<SemiHom> first_where(const std::vector<SemiHom>& cands, const auto& pred) {
    for (const auto& h : cands)
        if (pred(h)) return h;
    return std::nullopt;
}

}  // namespace

ProjectivityVerdict is_radical_projective(const ModulePtr& p, int max_basis, const SearchOptions& opts) {
    ProjectivityVerdict v;
    v.search = is_retract_of_free(radical_carrier(p), max_basis, opts);
    if (v.search.witness) v.certificate = RadicalProjectiveCertificate{p, *v.search.witness};
    return v;
}

Report certificate_violations(const RadicalProjectiveCertificate& cert) {
    Report rep;
    const auto& w = cert.witness;
    auto comp = semi_compose(w.surjection, w.injection);
    if (!same_maps(comp, semi_identity(w.injection.source()))) rep.add("phi psi = id", "");
    if (!is_surjective(w.surjection)) rep.add("phi surjective", "");
    if (!is_injective(w.injection)) rep.add("psi injective", "");
    return rep;
}

RadicalResolution make_resolution(ChainComplex complex, ModuleHom augmentation) {
    if (!same_module(augmentation.source(), complex.module(0)))
        throw ShapeError("augmentation must start at P_0");
    return {std::move(complex), std::move(augmentation)};
}

ResolutionReport verify_radical_resolution(const RadicalResolution& r, int max_basis, const SearchOptions& opts) {
    ResolutionReport out;
    out.defects = exactness_defects(r);
    for (int n = 0; n <= r.complex.top(); ++n) {
        out.verdicts.push_back(is_radical_projective(r.complex.module(n), max_basis, opts));
        const auto& v = out.verdicts.back();
        if (!v.certified())
            out.notes.add("P_n radical projective", at_degree(n) + ": no retract witness with basis <= " +
                                                        std::to_string(max_basis) +
                                                        (v.search.any_bound_exceeded() ? " (search bound hit)" : ""));
        else if (!certificate_violations(*v.certificate).ok())
            out.defects.add("certificate is a retraction", at_degree(n));
    }
    return out;
}

LemmaProResult lemma_pro_witnesses(const SemiHom& rf, const RetractWitness& retract, const SemiHom& alpha,
                                   const SemiHom& alpha_prime) {
    if (!same_semimodule(alpha.source(), retract.injection.source()) ||
        !same_semimodule(alpha_prime.source(), retract.injection.source()))
        throw ShapeError("lemma_pro_witnesses: alpha must start at the certified semimodule");
    if (auto w = steady_counterexample(rf))
        throw PreconditionError("lemma_pro_witnesses: R(f) is not steady at " + witness({w->first, w->second}));
    if (!same_maps(semi_compose(rf, alpha), semi_compose(rf, alpha_prime)))
        throw PreconditionError("lemma_pro_witnesses: R(f) alpha != R(f) alpha'");

    LemmaProResult out;
    const auto& target = alpha.target();
    auto ker = kernel(rf).sorted();
    std::erase(ker, target->zero());
    ker.insert(ker.begin(), target->zero());

    const auto& free = retract.free;
    for (int a = 0; a < free.rank; ++a) {
        Elem basis = retract.surjection(free.basis[idx(a)]);
        Elem x = alpha(basis), y = alpha_prime(basis);
        bool found = false;
        for (Elem n1 : ker) {
            for (Elem n2 : ker)
                if (target->add(x, n1) == target->add(y, n2)) {
                    out.kernel_witnesses.push_back(n1);
                    out.kernel_witnesses_prime.push_back(n2);
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) {
            out.violations.add("kernel witnesses exist for each basis element", "basis " + std::to_string(a));
            return out;
        }
    }
    auto lambda = hom_from_basis(free, target, out.kernel_witnesses);
    auto lambda_prime = hom_from_basis(free, target, out.kernel_witnesses_prime);
    auto beta = semi_compose(lambda, retract.injection);
    auto beta_prime = semi_compose(lambda_prime, retract.injection);

    if (!same_maps(semi_add(alpha, beta), semi_add(alpha_prime, beta_prime)))
        out.violations.add("alpha + beta = alpha' + beta'", "");
    if (!is_zero_hom(semi_compose(rf, beta))) out.violations.add("R(f) beta = 0", "");
    if (!is_zero_hom(semi_compose(rf, beta_prime))) out.violations.add("R(f) beta' = 0", "");
    out.beta = std::move(beta);
    out.beta_prime = std::move(beta_prime);
    return out;
}

LemmaProResult lemma_pro_witnesses(const ModuleHom& f, const RadicalProjectiveCertificate& cert, const SemiHom& alpha,
                                   const SemiHom& alpha_prime) {
    auto rf = radical_hom(f);
    if (!same_semimodule(alpha.target(), rf.source()))
        throw ShapeError("lemma_pro_witnesses: alpha must land in R(source of f)");
    return lemma_pro_witnesses(rf, cert.witness, alpha, alpha_prime);
}

LiftResult lift_map(const ModuleHom& g, const RadicalResolution& r, const RadicalResolution& r2, const LiftOptions& opts) {
    if (!same_module(g.source(), r.target()) || !same_module(g.target(), r2.target()))
        throw ShapeError("lift_map: g must run between the resolved modules");
    for (const auto* res : {&r, &r2}) {
        auto defects = exactness_defects(*res);
        if (!defects.ok())
            throw PreconditionError("lift_map: resolution is not exact: " + defects.violations.front().law + " " +
                                    defects.violations.front().witness);
    }
    const int top = std::max(r.complex.top(), r2.complex.top());
    auto src = apply_radical(pad_complex(r.complex, top));
    auto tgt = apply_radical(pad_complex(r2.complex, top));
    auto ra = radical_hom(r.augmentation), ra2 = radical_hom(r2.augmentation);
    auto goal0 = semi_compose(radical_hom(g), ra);

    std::mt19937_64 rng(opts.seed);
    std::vector<std::vector<SemiHom>> cands;
    for (int n = 0; n <= top; ++n) {
        auto homs = enumerate_homs(src.object(n), tgt.object(n), opts.search);
        if (opts.seed == 0) {
            if (same_semimodule(src.object(n), tgt.object(n))) {
                auto id = semi_identity(src.object(n));
                auto it = std::ranges::find(homs, id);
                if (it != homs.end()) std::rotate(homs.begin(), it, it + 1);
            }
        } else {
            std::shuffle(homs.begin(), homs.end(), rng);
        }
        cands.push_back(std::move(homs));
    }

    std::vector<SemiHom> comps;
    auto fits = [&](int n, const SemiHom& h) {
        if (n == 0) return same_maps(semi_compose(ra2, h), goal0);
        return same_maps(semi_compose(tgt.diff(n), h), semi_compose(comps[idx(n - 1)], src.diff(n)));
    };
    std::size_t tried = 0;
    auto dfs = [&](auto&& self, int n) -> bool {
        if (n > top) return true;
        for (const auto& h : cands[idx(n)]) {
            if (++tried > opts.search.hom_bound) throw SearchBoundExceeded("lift search bound");
            if (!fits(n, h)) continue;
            comps.push_back(h);
            if (self(self, n + 1)) return true;
            comps.pop_back();
        }
        return false;
    };

    LiftResult out;
    if (!dfs(dfs, 0)) {
        out.violations.add("a lift exists", "no chain of components found through degree " + std::to_string(top));
        return out;
    }
    auto map = make_semi_complex_map(src, tgt, std::move(comps));
    if (!same_maps(semi_compose(ra2, map.at(0)), goal0)) out.violations.add("R(g) R(f) = R(f') phi_0", "");
    out.map = std::move(map);
    return out;
}

HomotopyConstruction homotopy_between_lifts(const SemiComplexMap& phi, const SemiComplexMap& psi,
                                            const RadicalResolution& r, const RadicalResolution& r2, int max_basis,
                                            const SearchOptions& opts) {
    const int top = std::max({phi.top(), psi.top(), r.complex.top(), r2.complex.top()});
    auto src = apply_radical(pad_complex(r.complex, top));
    auto tgt = apply_radical(pad_complex(r2.complex, top));
    auto pad = [&](const SemiComplexMap& m) {
        auto comps = m.components;
        for (int n = m.top() + 1; n <= top; ++n) comps.push_back(semi_zero(src.object(n), tgt.object(n)));
        return make_semi_complex_map(src, tgt, std::move(comps));
    };
    auto p = pad(phi), q = pad(psi);
    auto ra2 = radical_hom(r2.augmentation);
    if (!same_maps(semi_compose(ra2, p.at(0)), semi_compose(ra2, q.at(0))))
        throw PreconditionError("homotopy_between_lifts: maps lift different R(g)");
    if (steady_counterexample(ra2)) throw PreconditionError("homotopy_between_lifts: R(augmentation') is not steady");
    for (int n = 1; n <= top; ++n)
        if (steady_counterexample(tgt.diff(n)))
            throw PreconditionError("homotopy_between_lifts: R(f'_n) is not steady at " + at_degree(n));

    HomotopyConstruction out;
    HomotopyPair st;
    for (int n = 0; n <= top; ++n) {
        const auto& obj = src.object(n);
        const SemiHom rf = n == 0 ? ra2 : tgt.diff(n);
        SemiHom alpha = p.at(n), alpha_prime = q.at(n);
        if (n >= 1) {
            alpha = semi_add(alpha, semi_compose(st.s[idx(n - 1)], src.diff(n)));
            alpha_prime = semi_add(alpha_prime, semi_compose(st.t[idx(n - 1)], src.diff(n)));
        }
        if (!same_maps(semi_compose(rf, alpha), semi_compose(rf, alpha_prime))) {
            out.violations.add("R(f'_n) alpha = R(f'_n) alpha'", at_degree(n));
            return out;
        }

        auto verdict = n <= r.complex.top() ? is_radical_projective(r.complex.module(n), max_basis, opts)
                                            : is_radical_projective(zero_module(r.complex.ring()), 1, opts);
        std::optional<SemiHom> beta, beta_prime;
        if (verdict.certified()) {
            auto lp = lemma_pro_witnesses(rf, verdict.certificate->witness, alpha, alpha_prime);
            out.violations.merge(lp.violations, at_degree(n));
            beta = lp.beta;
            beta_prime = lp.beta_prime;
        } else {
            out.notes.push_back(at_degree(n) + ": kernel witness step by search (no certificate)");
            std::vector<SemiHom> killed;
            for (auto& h : zero_first(enumerate_homs(obj, tgt.object(n), opts), obj, tgt.object(n)))
                if (is_zero_hom(semi_compose(rf, h))) killed.push_back(std::move(h));
            for (const auto& b : killed) {
                auto lhs = semi_add(alpha, b);
                if (auto b2 = first_where(killed, [&](const SemiHom& h) { return same_maps(lhs, semi_add(alpha_prime, h)); })) {
                    beta = b;
                    beta_prime = *b2;
                    break;
                }
            }
            if (!beta) out.violations.add("beta, beta' exist", at_degree(n));
        }
        if (!beta || !beta_prime) return out;

        // Factor beta, beta' through R(f'_{n+1}).
        const auto next_obj = object_or_zero(tgt, n + 1);
        const SemiHom next = n < top ? tgt.diff(n + 1) : semi_zero(next_obj, tgt.object(n));
        auto factor = [&](const SemiHom& b) -> std::optional<SemiHom> {
            if (verdict.certified()) {
                const auto& w = verdict.certificate->witness;
                std::vector<Elem> images;
                for (Elem basis : w.free.basis) {
                    Elem y = b(w.surjection(basis));
                    std::optional<Elem> pre;
                    if (next(next_obj->zero()) == y) pre = next_obj->zero();
                    for (Elem x = 0; x < next_obj->size() && !pre; ++x)
                        if (next(x) == y) pre = x;
                    if (!pre) return std::nullopt;
                    images.push_back(*pre);
                }
                auto s = semi_compose(hom_from_basis(w.free, next_obj, images), w.injection);
                if (!same_maps(semi_compose(next, s), b)) return std::nullopt;
                return s;
            }
            auto cands = zero_first(enumerate_homs(obj, next_obj, opts), obj, next_obj);
            return first_where(cands, [&](const SemiHom& s) { return same_maps(semi_compose(next, s), b); });
        };
        auto s = factor(*beta), t = factor(*beta_prime);
        if (!s || !t) {
            out.violations.add("beta factors through R(f'_{n+1})", at_degree(n));
            return out;
        }
        if (!verdict.certified()) out.notes.push_back(at_degree(n) + ": factorization by search (no certificate)");
        st.s.push_back(std::move(*s));
        st.t.push_back(std::move(*t));
    }
    out.violations.merge(homotopy_pair_violations(p, q, st));
    out.pair = std::move(st);
    return out;
}

H0Report resolution_h0_check(const RadicalResolution& r, const SearchOptions& opts) {
    auto rc = apply_radical(r.complex);
    auto ra = radical_hom(r.augmentation);
    auto h0 = homology(rc, 0);
    auto q = bourne_quotient(rc.object(0), kernel(ra));
    auto target = radical_carrier(r.target());
    H0Report out;
    out.h0_classes = h0.class_count();
    out.quotient_classes = q.class_count();
    out.target_size = target->size();
    out.h0_iso_quotient = find_isomorphism(h0.carrier(), q.quotient, opts).has_value();
    out.h0_iso_target = find_isomorphism(h0.carrier(), target, opts).has_value();
    out.quotient_iso_target = find_isomorphism(q.quotient, target, opts).has_value();
    out.h0_iso_p0 = find_isomorphism(h0.carrier(), rc.object(0), opts).has_value();
    return out;
}

}  // namespace radhom
