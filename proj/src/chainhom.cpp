#include "radhom/chainhom.hpp"

#include <algorithm>
#include <string>

namespace radhom {

namespace {

std::size_t idx(int e) { return static_cast<std::size_t>(e); }

std::string at_degree(int n) { return "degree " + std::to_string(n); }
std::string at_degree(int n, Elem x) { return at_degree(n) + " at " + witness({x}); }

bool same_maps(const SemiHom& a, const SemiHom& b) { return a.map() == b.map(); }

ComplexMap pad_map(const ComplexMap& m, int top) {
    if (top <= m.top()) return m;
    ComplexMap out{pad_complex(m.source, top), pad_complex(m.target, top), m.components};
    for (int n = m.top() + 1; n <= top; ++n) out.components.push_back(hom_zero(out.source.module(n), out.target.module(n)));
    return out;
}

SemiComplexMap pad_semi_map(const SemiComplexMap& m, int top) {
    if (top <= m.top()) return m;
    SemiComplexMap out{pad_semi_complex(m.source, top), pad_semi_complex(m.target, top), m.components};
    for (int n = m.top() + 1; n <= top; ++n) out.components.push_back(semi_zero(out.source.object(n), out.target.object(n)));
    return out;
}

// Object C_{n} of a complex, or a zero object one past the top.
SemimodulePtr object_or_zero(const SemiComplex& c, int n) {
    return n <= c.top() ? c.object(n) : zero_semimodule(c.object(0)->scalars());
}

ModulePtr module_or_zero(const ChainComplex& c, int n) { return n <= c.top() ? c.module(n) : zero_module(c.ring()); }

void require_same_module(const ModulePtr& a, const ModulePtr& b, const std::string& what) {
    if (!same_module(a, b)) throw ShapeError(what);
}

void require_same_object(const SemimodulePtr& a, const SemimodulePtr& b, const std::string& what) {
    if (!same_semimodule(a, b)) throw ShapeError(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Module level

ChainComplex make_complex(std::vector<ModulePtr> modules, std::vector<ModuleHom> diffs) {
    if (modules.empty()) throw ShapeError("complex needs at least one module");
    if (diffs.size() + 1 != modules.size())
        throw ShapeError("complex with " + std::to_string(modules.size()) + " modules needs " +
                         std::to_string(modules.size() - 1) + " differentials");
    ChainComplex c{std::move(modules), std::move(diffs)};
    for (int n = 0; n <= c.top(); ++n)
        if (!same_ring(c.module(n)->ring(), c.ring())) throw ShapeError("complex modules over different rings");
    for (int n = 1; n <= c.top(); ++n) {
        require_same_module(c.diff(n).source(), c.module(n), "differential f_" + std::to_string(n) + " has wrong source");
        require_same_module(c.diff(n).target(), c.module(n - 1),
                            "differential f_" + std::to_string(n) + " has wrong target");
    }
    for (int n = 1; n < c.top(); ++n)
        if (!is_zero_hom(hom_compose(c.diff(n), c.diff(n + 1))))
            throw AxiomError("f_n f_{n+1} is nonzero at " + at_degree(n));
    return c;
}

ChainComplex pad_complex(const ChainComplex& c, int top) {
    ChainComplex out = c;
    for (int n = c.top() + 1; n <= top; ++n) {
        auto z = zero_module(c.ring());
        out.diffs.push_back(hom_zero(z, out.modules.back()));
        out.modules.push_back(std::move(z));
    }
    return out;
}

ComplexMap make_complex_map(const ChainComplex& source, const ChainComplex& target, std::vector<ModuleHom> components) {
    const int top = static_cast<int>(components.size()) - 1;
    if (top < source.top() || top < target.top())
        throw ShapeError("complex map needs a component for every degree of both complexes");
    ComplexMap m{pad_complex(source, top), pad_complex(target, top), std::move(components)};
    for (int n = 0; n <= top; ++n) {
        require_same_module(m.at(n).source(), m.source.module(n), "component " + std::to_string(n) + " has wrong source");
        require_same_module(m.at(n).target(), m.target.module(n), "component " + std::to_string(n) + " has wrong target");
    }
    for (int n = 1; n <= top; ++n)
        if (hom_compose(m.target.diff(n), m.at(n)).map() != hom_compose(m.at(n - 1), m.source.diff(n)).map())
            throw AxiomError("square does not commute at " + at_degree(n));
    return m;
}

ComplexMap identity_map(const ChainComplex& c) {
    std::vector<ModuleHom> comps;
    for (const auto& m : c.modules) comps.push_back(hom_identity(m));
    return {c, c, std::move(comps)};
}

ComplexMap zero_map(const ChainComplex& source, const ChainComplex& target) {
    const int top = std::max(source.top(), target.top());
    ComplexMap m{pad_complex(source, top), pad_complex(target, top), {}};
    for (int n = 0; n <= top; ++n) m.components.push_back(hom_zero(m.source.module(n), m.target.module(n)));
    return m;
}

ComplexMap compose_maps(const ComplexMap& g, const ComplexMap& f) {
    const int top = std::max(g.top(), f.top());
    auto gp = pad_map(g, top), fp = pad_map(f, top);
    ComplexMap out{fp.source, gp.target, {}};
    for (int n = 0; n <= top; ++n) out.components.push_back(hom_compose(gp.at(n), fp.at(n)));
    return out;
}

Report module_homotopy_violations(const ComplexMap& phi, const ComplexMap& psi, const ModuleHomotopy& s) {
    const int top = std::max(phi.top(), psi.top());
    auto p = pad_map(phi, top), q = pad_map(psi, top);
    if (static_cast<int>(s.size()) != top + 1) throw ShapeError("homotopy needs one component per degree");
    for (int n = 0; n <= top; ++n) {
        require_same_module(p.at(n).source(), q.at(n).source(), "homotopy endpoints differ");
        require_same_module(s[idx(n)].source(), p.source.module(n), "s_" + std::to_string(n) + " has wrong source");
        if (n < top)
            require_same_module(s[idx(n)].target(), p.target.module(n + 1), "s_" + std::to_string(n) + " has wrong target");
    }
    Report rep;
    for (int n = 0; n <= top; ++n) {
        const auto& tgt = *p.target.module(n);
        for (Elem x = 0; x < p.source.module(n)->size(); ++x) {
            Elem lhs = p.at(n)(x);
            if (n >= 1) lhs = tgt.add(lhs, s[idx(n - 1)](p.source.diff(n)(x)));
            if (n < top) lhs = tgt.add(lhs, p.target.diff(n + 1)(s[idx(n)](x)));
            if (lhs != q.at(n)(x)) {
                rep.add("phi_n + s_{n-1} f_n + f'_{n+1} s_n = psi_n", at_degree(n, x));
                break;
            }
        }
    }
    return rep;
}

ModuleHomotopy zero_homotopy(const ChainComplex& source, const ChainComplex& target) {
    const int top = std::max(source.top(), target.top());
    auto src = pad_complex(source, top), tgt = pad_complex(target, top);
    ModuleHomotopy s;
    for (int n = 0; n <= top; ++n) s.push_back(hom_zero(src.module(n), module_or_zero(tgt, n + 1)));
    return s;
}

// ---------------------------------------------------------------------------
// Semimodule level

SemiComplex make_semi_complex(std::vector<SemimodulePtr> objects, std::vector<SemiHom> diffs) {
    if (objects.empty()) throw ShapeError("complex needs at least one object");
    if (diffs.size() + 1 != objects.size()) throw ShapeError("complex differential count mismatch");
    SemiComplex c{std::move(objects), std::move(diffs)};
    for (int n = 1; n <= c.top(); ++n) {
        require_same_object(c.diff(n).source(), c.object(n), "differential " + std::to_string(n) + " has wrong source");
        require_same_object(c.diff(n).target(), c.object(n - 1), "differential " + std::to_string(n) + " has wrong target");
    }
    for (int n = 1; n < c.top(); ++n)
        if (!is_zero_hom(semi_compose(c.diff(n), c.diff(n + 1))))
            throw AxiomError("d_n d_{n+1} is nonzero at " + at_degree(n));
    return c;
}

SemiComplex pad_semi_complex(const SemiComplex& c, int top) {
    SemiComplex out = c;
    for (int n = c.top() + 1; n <= top; ++n) {
        auto z = zero_semimodule(c.object(0)->scalars());
        out.diffs.push_back(semi_zero(z, out.objects.back()));
        out.objects.push_back(std::move(z));
    }
    return out;
}

SemiComplex apply_radical(const ChainComplex& c) {
    SemiComplex out;
    for (const auto& m : c.modules) out.objects.push_back(radical_carrier(m));
    for (const auto& f : c.diffs) out.diffs.push_back(radical_hom(f));
    for (int n = 1; n < out.top(); ++n)
        if (!is_zero_hom(semi_compose(out.diff(n), out.diff(n + 1))))
            throw InternalConsistencyError("R(f_n) R(f_{n+1}) is nonzero at " + at_degree(n));
    return out;
}

SemiComplexMap make_semi_complex_map(const SemiComplex& source, const SemiComplex& target,
                                     std::vector<SemiHom> components) {
    const int top = static_cast<int>(components.size()) - 1;
    if (top < source.top() || top < target.top())
        throw ShapeError("complex map needs a component for every degree of both complexes");
    SemiComplexMap m{pad_semi_complex(source, top), pad_semi_complex(target, top), std::move(components)};
    for (int n = 0; n <= top; ++n) {
        require_same_object(m.at(n).source(), m.source.object(n), "component " + std::to_string(n) + " has wrong source");
        require_same_object(m.at(n).target(), m.target.object(n), "component " + std::to_string(n) + " has wrong target");
    }
    for (int n = 1; n <= top; ++n)
        if (!same_maps(semi_compose(m.target.diff(n), m.at(n)), semi_compose(m.at(n - 1), m.source.diff(n))))
            throw AxiomError("square does not commute at " + at_degree(n));
    return m;
}

SemiComplexMap apply_radical(const ComplexMap& phi) {
    SemiComplexMap out{apply_radical(phi.source), apply_radical(phi.target), {}};
    for (const auto& f : phi.components) out.components.push_back(radical_hom(f));
    for (int n = 1; n <= out.top(); ++n)
        if (!same_maps(semi_compose(out.target.diff(n), out.at(n)), semi_compose(out.at(n - 1), out.source.diff(n))))
            throw InternalConsistencyError("R-image square does not commute at " + at_degree(n));
    return out;
}

SemiComplexMap semi_identity_map(const SemiComplex& c) {
    SemiComplexMap m{c, c, {}};
    for (const auto& o : c.objects) m.components.push_back(semi_identity(o));
    return m;
}

Report homotopy_pair_violations(const SemiComplexMap& phi, const SemiComplexMap& psi, const HomotopyPair& st) {
    const int top = std::max(phi.top(), psi.top());
    auto p = pad_semi_map(phi, top), q = pad_semi_map(psi, top);
    if (static_cast<int>(st.s.size()) != top + 1 || static_cast<int>(st.t.size()) != top + 1)
        throw ShapeError("homotopy pair needs one s and one t component per degree");
    for (int n = 0; n <= top; ++n) {
        require_same_object(st.s[idx(n)].source(), p.source.object(n), "s_" + std::to_string(n) + " has wrong source");
        require_same_object(st.t[idx(n)].source(), p.source.object(n), "t_" + std::to_string(n) + " has wrong source");
        if (n < top) {
            require_same_object(st.s[idx(n)].target(), p.target.object(n + 1), "s_" + std::to_string(n) + " has wrong target");
            require_same_object(st.t[idx(n)].target(), p.target.object(n + 1), "t_" + std::to_string(n) + " has wrong target");
        }
    }
    Report rep;
    for (int n = 0; n <= top; ++n) {
        const auto& tgt = *p.target.object(n);
        auto side = [&](const SemiComplexMap& m, const std::vector<SemiHom>& h, Elem x) {
            Elem v = m.at(n)(x);
            if (n >= 1) v = tgt.add(v, h[idx(n - 1)](p.source.diff(n)(x)));
            if (n < top) v = tgt.add(v, p.target.diff(n + 1)(h[idx(n)](x)));
            return v;
        };
        for (Elem x = 0; x < p.source.object(n)->size(); ++x)
            if (side(p, st.s, x) != side(q, st.t, x)) {
                rep.add("phi_n + s_{n-1} f_n + f'_{n+1} s_n = psi_n + t_{n-1} f_n + f'_{n+1} t_n", at_degree(n, x));
                break;
            }
    }
    return rep;
}

HomotopyPair zero_homotopy_pair(const SemiComplex& source, const SemiComplex& target) {
    const int top = std::max(source.top(), target.top());
    auto src = pad_semi_complex(source, top), tgt = pad_semi_complex(target, top);
    HomotopyPair st;
    for (int n = 0; n <= top; ++n) {
        st.s.push_back(semi_zero(src.object(n), object_or_zero(tgt, n + 1)));
        st.t.push_back(st.s.back());
    }
    return st;
}

// ---------------------------------------------------------------------------
// Homology

int HomologyData::class_of(Elem cycle) const {
    int local = cycle_module.local[idx(cycle)];
    if (local < 0) throw PreconditionError("class_of: element is not a cycle");
    return quotient.class_of[idx(local)];
}

Elem HomologyData::representative(int cls) const { return cycle_module.embed[idx(quotient.reps[idx(cls)])]; }

HomologyData homology(const SemiComplex& c, int n) {
    if (n < 0 || n > c.top()) throw ShapeError("homology degree out of range: " + std::to_string(n));
    const auto& obj = c.object(n);
    HomologyData h;
    h.degree = n;
    h.cycles = n == 0 ? whole(obj) : kernel(c.diff(n));
    h.boundaries = n == c.top() ? zero_sub(obj) : image(c.diff(n + 1));
    if (!h.boundaries.elements.is_subset_of(h.cycles.elements))
        throw InternalConsistencyError("boundaries are not contained in cycles at " + at_degree(n));
    h.cycle_module = restrict_to(h.cycles);
    std::vector<Elem> local;
    h.boundaries.elements.for_each([&](Elem b) { local.push_back(h.cycle_module.local[idx(b)]); });
    auto sub = make_subsemimodule(h.cycle_module.semimodule, local);
    h.quotient = bourne_quotient(h.cycle_module.semimodule, sub);
    return h;
}

SemiHom induced_homology_map(const SemiComplexMap& phi, const HomologyData& source, const HomologyData& target) {
    const int n = source.degree;
    const auto& f = phi.at(n);
    std::vector<Elem> map(idx(source.class_count()));
    for (int c = 0; c < source.class_count(); ++c) {
        int image_class = -1;
        for (Elem local : source.quotient.classes[idx(c)]) {
            Elem y = f(source.cycle_module.embed[idx(local)]);
            if (target.cycle_module.local[idx(y)] < 0)
                throw InternalConsistencyError("complex map sends a cycle outside the cycles at " + at_degree(n));
            int k = target.class_of(y);
            if (image_class < 0) image_class = k;
            if (k != image_class)
                throw InternalConsistencyError("induced homology map depends on the representative at " + at_degree(n));
        }
        map[idx(c)] = image_class;
    }
    auto rep = semi_hom_violations(*source.carrier(), *target.carrier(), map);
    if (!rep.ok()) throw InternalConsistencyError("induced homology map is not a hom: " + rep.violations.front().law);
    return SemiHom::trusted(source.carrier(), target.carrier(), std::move(map));
}

SemiHom induced_homology_map(const SemiComplexMap& phi, int n) {
    return induced_homology_map(phi, homology(phi.source, n), homology(phi.target, n));
}

bool is_acyclic(const SemiComplex& c) {
    for (int n = 0; n <= c.top(); ++n)
        if (homology(c, n).class_count() != 1) return false;
    return true;
}

bool is_radical_acyclic(const ChainComplex& c) { return is_acyclic(apply_radical(c)); }

HomotopyTransport radical_homotopy_transport(const ComplexMap& phi, const ComplexMap& psi, const ModuleHomotopy& s) {
    auto pre = module_homotopy_violations(phi, psi, s);
    if (!pre.ok())
        throw PreconditionError("maps are not homotopic via s: " + pre.violations.front().law + ", " +
                                pre.violations.front().witness);
    const int top = std::max(phi.top(), psi.top());
    auto rphi = apply_radical(pad_map(phi, top));
    auto rpsi = apply_radical(pad_map(psi, top));

    HomotopyTransport out;
    for (int n = 0; n <= top; ++n) {
        auto rs = radical_hom(s[idx(n)]);
        out.pair.t.push_back(semi_zero(rs.source(), rs.target()));
        out.pair.s.push_back(std::move(rs));
    }
    out.pair_report = homotopy_pair_violations(rphi, rpsi, out.pair);
    for (int n = 0; n <= top; ++n) {
        auto hs = homology(rphi.source, n), ht = homology(rphi.target, n);
        auto a = induced_homology_map(rphi, hs, ht), b = induced_homology_map(rpsi, hs, ht);
        for (int c = 0; c < hs.class_count(); ++c)
            if (a(c) != b(c)) {
                out.homology_report.add("H_n(R(phi)) = H_n(R(psi))", at_degree(n) + " at class " + std::to_string(c));
                break;
            }
    }
    return out;
}

HomotopySearch find_homotopy_pair(const SemiComplexMap& phi, const SemiComplexMap& psi, const SearchOptions& opts) {
    const int top = std::max(phi.top(), psi.top());
    auto p = pad_semi_map(phi, top), q = pad_semi_map(psi, top);
    HomotopySearch out;

    std::vector<std::vector<SemiHom>> cands;
    try {
        for (int n = 0; n <= top; ++n) {
            auto src = p.source.object(n), tgt = object_or_zero(p.target, n + 1);
            auto homs = enumerate_homs(src, tgt, opts);
            auto zero = semi_zero(src, tgt);
            std::erase_if(homs, [&](const SemiHom& h) { return h == zero; });
            homs.insert(homs.begin(), zero);
            cands.push_back(std::move(homs));
        }
    } catch (const SearchBoundExceeded&) {
        out.bound_exceeded = true;
        return out;
    }

    HomotopyPair st;
    std::size_t tried = 0;
    // Identity at degree n involves only s_{n-1}, t_{n-1}, s_n, t_n.
    auto holds_at = [&](int n) {
        const auto& tgt = *p.target.object(n);
        for (Elem x = 0; x < p.source.object(n)->size(); ++x) {
            Elem l = p.at(n)(x), r = q.at(n)(x);
            if (n >= 1) {
                Elem fx = p.source.diff(n)(x);
                l = tgt.add(l, st.s[idx(n - 1)](fx));
                r = tgt.add(r, st.t[idx(n - 1)](fx));
            }
            if (n < top) {
                l = tgt.add(l, p.target.diff(n + 1)(st.s[idx(n)](x)));
                r = tgt.add(r, p.target.diff(n + 1)(st.t[idx(n)](x)));
            }
            if (l != r) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int n) -> bool {
        if (n > top) return true;
        for (const auto& s : cands[idx(n)])
            for (const auto& t : cands[idx(n)]) {
                if (++tried > opts.hom_bound) throw SearchBoundExceeded("homotopy search bound");
                st.s.push_back(s);
                st.t.push_back(t);
                if (holds_at(n) && self(self, n + 1)) return true;
                st.s.pop_back();
                st.t.pop_back();
            }
        return false;
    };
    try {
        if (dfs(dfs, 0)) out.pair = std::move(st);
    } catch (const SearchBoundExceeded&) {
        out.bound_exceeded = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Snake

ShortExactSeq make_short_exact_seq(const ComplexMap& phi, const ComplexMap& psi) {
    const int top = std::max(phi.top(), psi.top());
    ShortExactSeq ses{pad_map(phi, top), pad_map(psi, top)};
    for (int n = 0; n <= top; ++n)
        require_same_module(ses.phi.target.module(n), ses.psi.source.module(n),
                            "short exact sequence: middle complexes differ at " + at_degree(n));
    for (int n = 1; n <= top; ++n)
        if (ses.phi.target.diff(n).map() != ses.psi.source.diff(n).map())
            throw ShapeError("short exact sequence: middle differentials differ at " + at_degree(n));
    return ses;
}

namespace {

struct RadicalSes {
    SemiComplexMap phi;
    SemiComplexMap psi;
};

RadicalSes radical_ses(const ShortExactSeq& ses) { return {apply_radical(ses.phi), apply_radical(ses.psi)}; }

Report snake_report(const ShortExactSeq& ses, int first_hypothesis_degree) {
    auto r = radical_ses(ses);
    const int top = ses.top();
    Report rep;
    for (int n = 0; n <= top; ++n) {
        const auto& rphi = r.phi.at(n);
        const auto& rpsi = r.psi.at(n);
        if (kernel(rphi).size() != 1) rep.add("R(phi_n) has zero kernel", at_degree(n));
        if (!is_exact_at(rphi, rpsi)) rep.add("im R(phi_n) = ker R(psi_n)", at_degree(n));
        if (!is_surjective(rpsi)) rep.add("R(psi_n) is surjective", at_degree(n));
        if (n < first_hypothesis_degree) continue;
        const auto& mid = r.phi.target;
        auto boundaries = n == top ? zero_sub(mid.object(n)) : image(mid.diff(n + 1));
        if (!image(rphi).elements.is_subset_of(boundaries.elements))
            rep.add("im R(phi_n) in im R(f_{n+1})", at_degree(n));
        if (n >= 1) {
            if (auto w = subtractive_counterexample(image(r.psi.target.diff(n))))
                rep.add("im R(f''_n) is subtractive", at_degree(n) + " at " + witness({w->first, w->second}));
        }
        if (auto w = steady_counterexample(rpsi))
            rep.add("R(psi_n) is steady", at_degree(n) + " at " + witness({w->first, w->second}));
    }
    return rep;
}

void require_snake(const ShortExactSeq& ses) {
    auto rep = check_snake_hypotheses(ses);
    if (!rep.ok())
        throw PreconditionError("snake hypotheses fail: " + rep.violations.front().law + ", " +
                                rep.violations.front().witness);
}

ConnectingMap chase(const RadicalSes& r, int n, const HomologyData& h_right, const HomologyData& h_left) {
    ConnectingMap out;
    out.degree = n;
    const auto& psi = r.psi.at(n);
    const auto& f = r.phi.target.diff(n);
    const auto& phi = r.phi.at(n - 1);
    const auto& left = r.phi.source;

    auto preimages = [](const SemiHom& h, Elem y) {
        std::vector<Elem> xs;
        for (Elem x = 0; x < h.source()->size(); ++x)
            if (h(x) == y) xs.push_back(x);
        return xs;
    };
    auto is_cycle = [&](Elem w) { return n - 1 == 0 || left.diff(n - 1)(w) == left.object(n - 2)->zero(); };

    std::vector<Elem> map(idx(h_right.class_count()), -1);
    for (int c = 0; c < h_right.class_count(); ++c) {
        int canonical = -1;
        bool reported = false;
        // Representatives in increasing order, so the first is the canonical choice.
        for (Elem local : h_right.quotient.classes[idx(c)]) {
            Elem z = h_right.cycle_module.embed[idx(local)];
            auto lifts = preimages(psi, z);
            if (lifts.empty()) {
                out.defects.add("lift through R(psi_n) exists", at_degree(n, z));
                continue;
            }
            for (Elem x : lifts) {
                Elem y = f(x);
                auto pulls = preimages(phi, y);
                if (pulls.empty()) {
                    out.defects.add("preimage through R(phi_{n-1}) exists", at_degree(n, y));
                    continue;
                }
                for (Elem w : pulls) {
                    if (!is_cycle(w)) {
                        out.violations.add("pulled-back element is a cycle", at_degree(n, w));
                        continue;
                    }
                    int k = h_left.class_of(w);
                    if (canonical < 0) canonical = k;
                    if (k != canonical && !reported) {
                        out.violations.add("connecting map is independent of choices",
                                           at_degree(n) + " at class " + std::to_string(c) + " via " +
                                               witness({z, x, w}));
                        reported = true;
                    }
                }
            }
        }
        map[idx(c)] = canonical;
    }
    if (!out.defects.ok() || std::ranges::find(map, -1) != map.end()) return out;
    auto homrep = semi_hom_violations(*h_right.carrier(), *h_left.carrier(), map);
    for (const auto& v : homrep.violations) out.violations.add("connecting map " + v.law, at_degree(n) + " " + v.witness);
    out.map = SemiHom::trusted(h_right.carrier(), h_left.carrier(), std::move(map));
    return out;
}

struct LesData {
    std::vector<HomologyData> left, middle, right;
    std::vector<SemiHom> h_phi, h_psi;
    std::vector<ConnectingMap> alpha;  // alpha[n] for n >= 1; alpha[0] unused
};

LesData les_data(const ShortExactSeq& ses) {
    auto r = radical_ses(ses);
    LesData d;
    for (int n = 0; n <= ses.top(); ++n) {
        d.left.push_back(homology(r.phi.source, n));
        d.middle.push_back(homology(r.phi.target, n));
        d.right.push_back(homology(r.psi.target, n));
        d.h_phi.push_back(induced_homology_map(r.phi, d.left.back(), d.middle.back()));
        d.h_psi.push_back(induced_homology_map(r.psi, d.middle.back(), d.right.back()));
    }
    d.alpha.emplace_back();
    for (int n = 1; n <= ses.top(); ++n) d.alpha.push_back(chase(r, n, d.right[idx(n)], d.left[idx(n - 1)]));
    return d;
}

}  // namespace

Report check_snake_hypotheses(const ShortExactSeq& ses) { return snake_report(ses, 1); }

Report snake_hypotheses_all_degrees(const ShortExactSeq& ses) { return snake_report(ses, 0); }

ConnectingMap connecting_homomorphism(const ShortExactSeq& ses, int n) {
    if (n < 1 || n > ses.top()) throw ShapeError("connecting map degree out of range: " + std::to_string(n));
    require_snake(ses);
    auto r = radical_ses(ses);
    return chase(r, n, homology(r.psi.target, n), homology(r.phi.source, n - 1));
}

LongExactSequence long_exact_sequence(const ShortExactSeq& ses) {
    require_snake(ses);
    auto d = les_data(ses);
    LongExactSequence out;

    // Objects and maps in sequence order; a missing connecting map breaks
    // the chain and the junctions around it are not checked.
    struct Step {
        std::string label;
        std::optional<SemiHom> map;
    };
    std::vector<Step> steps;
    for (int n = ses.top(); n >= 0; --n) {
        const auto deg = std::to_string(n);
        steps.push_back({"H_" + deg + "(R(phi))", d.h_phi[idx(n)]});
        steps.push_back({"H_" + deg + "(R(psi))", d.h_psi[idx(n)]});
        if (n >= 1) {
            auto& a = d.alpha[idx(n)];
            out.violations.merge(a.violations);
            out.defects.merge(a.defects);
            steps.push_back({"alpha_" + deg, a.map});
            out.connecting.push_back(a);
        }
    }
    for (const auto& s : steps)
        if (s.map) out.maps.push_back({s.label, *s.map});

    auto class_witness = [](const SubSemimodule& a, const SubSemimodule& b) {
        for (Elem x = 0; x < a.parent->size(); ++x)
            if (a.contains(x) != b.contains(x)) return "class " + std::to_string(x);
        return std::string();
    };
    if (steps.front().map) {
        const auto& first = *steps.front().map;
        auto ker = kernel(first);
        if (ker.size() != 1) out.exactness.add("exact at " + steps.front().label + " source", class_witness(ker, zero_sub(first.source())));
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (!steps[i].map || !steps[i + 1].map) continue;
        const auto& f = *steps[i].map;
        const auto& g = *steps[i + 1].map;
        auto im = image(f), ker = kernel(g);
        if (!(im.elements == ker.elements))
            out.exactness.add("exact between " + steps[i].label + " and " + steps[i + 1].label, class_witness(im, ker));
    }
    if (steps.back().map && !is_surjective(*steps.back().map))
        out.exactness.add("exact at " + steps.back().label + " target", class_witness(image(*steps.back().map), whole(steps.back().map->target())));
    return out;
}

Report naturality_check(const ShortExactSeq& top_row, const ShortExactSeq& bottom_row, const ComplexMap& beta_left,
                        const ComplexMap& beta, const ComplexMap& beta_right) {
    const int top = std::max({top_row.top(), bottom_row.top(), beta_left.top(), beta.top(), beta_right.top()});
    auto row1 = make_short_exact_seq(pad_map(top_row.phi, top), pad_map(top_row.psi, top));
    auto row2 = make_short_exact_seq(pad_map(bottom_row.phi, top), pad_map(bottom_row.psi, top));
    auto bl = apply_radical(pad_map(beta_left, top));
    auto bm = apply_radical(pad_map(beta, top));
    auto br = apply_radical(pad_map(beta_right, top));
    auto r1 = radical_ses(row1), r2 = radical_ses(row2);

    for (int n = 0; n <= top; ++n) {
        require_same_object(bl.at(n).source(), r1.phi.source.object(n), "beta' source differs at " + at_degree(n));
        require_same_object(bl.at(n).target(), r2.phi.source.object(n), "beta' target differs at " + at_degree(n));
        require_same_object(bm.at(n).source(), r1.phi.target.object(n), "beta source differs at " + at_degree(n));
        require_same_object(bm.at(n).target(), r2.phi.target.object(n), "beta target differs at " + at_degree(n));
        require_same_object(br.at(n).source(), r1.psi.target.object(n), "beta'' source differs at " + at_degree(n));
        require_same_object(br.at(n).target(), r2.psi.target.object(n), "beta'' target differs at " + at_degree(n));
        if (!same_maps(semi_compose(bm.at(n), r1.phi.at(n)), semi_compose(r2.phi.at(n), bl.at(n))))
            throw PreconditionError("diagram does not commute: beta phi != phi' beta' at " + at_degree(n));
        if (!same_maps(semi_compose(br.at(n), r1.psi.at(n)), semi_compose(r2.psi.at(n), bm.at(n))))
            throw PreconditionError("diagram does not commute: beta'' psi != psi' beta at " + at_degree(n));
    }
    require_snake(row1);
    require_snake(row2);

    auto d1 = les_data(row1), d2 = les_data(row2);
    Report rep;
    auto compare = [&](const SemiHom& a, const SemiHom& b, const std::string& law, int n) {
        for (Elem c = 0; c < a.source()->size(); ++c)
            if (a(c) != b(c)) {
                rep.add(law, at_degree(n) + " at class " + std::to_string(c));
                return;
            }
    };
    for (int n = 0; n <= top; ++n) {
        auto hl = induced_homology_map(bl, d1.left[idx(n)], d2.left[idx(n)]);
        auto hm = induced_homology_map(bm, d1.middle[idx(n)], d2.middle[idx(n)]);
        auto hr = induced_homology_map(br, d1.right[idx(n)], d2.right[idx(n)]);
        compare(semi_compose(hm, d1.h_phi[idx(n)]), semi_compose(d2.h_phi[idx(n)], hl), "H(beta) H(phi) = H(phi') H(beta')", n);
        compare(semi_compose(hr, d1.h_psi[idx(n)]), semi_compose(d2.h_psi[idx(n)], hm), "H(beta'') H(psi) = H(psi') H(beta)", n);
        if (n == 0) continue;
        const auto& a1 = d1.alpha[idx(n)];
        const auto& a2 = d2.alpha[idx(n)];
        if (!a1.map || !a2.map) {
            rep.add("connecting maps exist", at_degree(n));
            continue;
        }
        auto hl_below = induced_homology_map(bl, d1.left[idx(n - 1)], d2.left[idx(n - 1)]);
        compare(semi_compose(hl_below, *a1.map), semi_compose(*a2.map, hr), "H(beta') alpha = alpha' H(beta'')", n);
    }
    return rep;
}

}  // namespace radhom
