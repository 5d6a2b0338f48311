#include "fixtures.hpp"

#include <algorithm>

namespace fixtures {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

ModulePtr at_or_zero(const ChainComplex& c, int n) {
    return n >= 0 && n <= c.top() ? c.module(n) : zero_module(c.ring());
}

RingPtr f4() {
    auto add = Table::from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    auto mul = Table::from_rows({{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
    return make_table_ring(add, mul, 0, 1);
}

ModulePtr quotient_by(const ModulePtr& m, Elem gen) {
    Elem g[1] = {gen};
    return quotient_module(submodule_generated(m, g)).module;
}

}  // namespace

RingPtr zn(int n) { return make_cyclic_ring(n); }

ModulePtr vec(const RingPtr& field, int dim) { return dim == 0 ? zero_module(field) : free_module(field, dim); }

std::vector<RingPtr> small_rings() {
    return {zn(2), zn(3), zn(4), zn(6), zn(8), zn(9), make_product_ring(zn(2), zn(2))};
}

std::vector<ModulePtr> module_corpus() {
    std::vector<ModulePtr> out;
    for (int n = 1; n <= 16; ++n) out.push_back(ring_as_module(zn(n)));
    out.push_back(free_module(zn(2), 2));
    out.push_back(free_module(zn(3), 2));
    out.push_back(free_module(zn(2), 3));
    out.push_back(free_module(zn(2), 4));
    out.push_back(free_module(zn(5), 2));
    out.push_back(free_module(zn(4), 2));
    out.push_back(free_module(zn(6), 2));
    out.push_back(direct_sum(quotient_by(ring_as_module(zn(4)), 2), ring_as_module(zn(4))));
    out.push_back(direct_sum(ring_as_module(zn(8)), quotient_by(ring_as_module(zn(8)), 2)));
    out.push_back(direct_sum(ring_as_module(zn(9)), quotient_by(ring_as_module(zn(9)), 3)));
    out.push_back(direct_sum(ring_as_module(zn(16)), quotient_by(ring_as_module(zn(16)), 4)));
    out.push_back(ring_as_module(make_product_ring(zn(2), zn(4))));
    out.push_back(free_module(f4(), 2));
    out.push_back(free_module(zn(4), 3));
    return out;
}

std::vector<LineData> lines(int p) {
    auto f = zn(p);
    auto v = free_module(f, 2);
    std::vector<SubmoduleSet> seen;
    std::vector<LineData> out;
    for (Elem x = 1; x < v->size(); ++x) {
        Elem g[1] = {x};
        auto line = submodule_generated(v, g);
        if (std::find(seen.begin(), seen.end(), line) != seen.end()) continue;
        seen.push_back(line);
        auto w = submodule_as_module(line);
        auto q = quotient_module(line);
        auto primary = make_resolution(make_complex({v, w.module}, {w.inclusion}), q.projection);
        auto seq = make_complex({q.module, v, w.module}, {q.projection, w.inclusion});
        auto literal = make_resolution(seq, hom_zero(q.module, zero_module(f)));
        out.push_back({f, v, line, w, q, primary, literal, seq});
    }
    return out;
}

Cone make_cone(const std::vector<int>& dims_y, const std::vector<int>& dims_x, std::vector<ModuleHom> u) {
    auto f2 = zn(2);
    const int t = static_cast<int>(dims_y.size()) - 1;  // X and Y live in degrees 0..t
    std::vector<ModulePtr> ys, xs, cs, xshift;
    for (int n = 0; n <= t; ++n) {
        ys.push_back(vec(f2, dims_y[idx(n)]));
        xs.push_back(vec(f2, dims_x[idx(n)]));
    }
    for (int n = 0; n <= t + 1; ++n) {
        auto y = n <= t ? ys[idx(n)] : zero_module(f2);
        auto x = n >= 1 ? xs[idx(n - 1)] : zero_module(f2);
        cs.push_back(direct_sum(y, x));
        xshift.push_back(x);
    }
    auto ypad = ys;
    ypad.push_back(zero_module(f2));

    std::vector<ModuleHom> dy, dc, dx;
    for (int n = 1; n <= t + 1; ++n) {
        dy.push_back(hom_zero(ypad[idx(n)], ypad[idx(n - 1)]));
        dx.push_back(hom_zero(xshift[idx(n)], xshift[idx(n - 1)]));
        // (y, x) -> (u_{n-1}(x), 0)
        const int nx = xshift[idx(n)]->size(), nx_below = xshift[idx(n - 1)]->size();
        std::vector<Elem> map(idx(cs[idx(n)]->size()));
        for (Elem e = 0; e < cs[idx(n)]->size(); ++e) {
            const Elem x = e % nx;
            map[idx(e)] = u[idx(n - 1)].map()[idx(x)] * nx_below;
        }
        dc.push_back(check_module_hom(cs[idx(n)], cs[idx(n - 1)], std::move(map)));
    }
    auto left = make_complex(ypad, dy), middle = make_complex(cs, dc), right = make_complex(xshift, dx);

    std::vector<ModuleHom> phi, psi;
    for (int n = 0; n <= t + 1; ++n) {
        const int nx = xshift[idx(n)]->size();
        std::vector<Elem> in(idx(ypad[idx(n)]->size())), out(idx(cs[idx(n)]->size()));
        for (Elem y = 0; y < ypad[idx(n)]->size(); ++y) in[idx(y)] = y * nx;
        for (Elem e = 0; e < cs[idx(n)]->size(); ++e) out[idx(e)] = e % nx;
        phi.push_back(check_module_hom(ypad[idx(n)], cs[idx(n)], std::move(in)));
        psi.push_back(check_module_hom(cs[idx(n)], xshift[idx(n)], std::move(out)));
    }
    auto ses = make_short_exact_seq(make_complex_map(left, middle, phi), make_complex_map(middle, right, psi));
    return {dims_y, dims_x, std::move(u), std::move(ses)};
}

std::vector<Cone> cone_corpus(Rng& rng) {
    auto f2 = zn(2);
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes{
        {{1}, {1}},       {{2}, {1}},       {{1, 1}, {1, 1}}, {{0, 1}, {1, 2}},
        {{1, 2}, {0, 2}}, {{2, 1}, {1, 1}}, {{1, 1, 1}, {0, 1, 1}}, {{2, 0}, {2, 1}}};
    std::vector<Cone> out;
    for (const auto& [dy, dx] : shapes) {
        std::vector<ModuleHom> u;
        for (std::size_t n = 0; n < dy.size(); ++n) {
            auto x = vec(f2, dx[n]), y = vec(f2, dy[n]);
            auto homs = enumerate_module_homs(x, y);
            if (n >= 1)
                std::erase_if(homs, [](const ModuleHom& h) { return !hom_image(h).is_whole(); });
            std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
            u.push_back(homs[pick(rng)]);
        }
        out.push_back(make_cone(dy, dx, std::move(u)));
    }
    return out;
}

std::vector<ShortExactSeq> split_sequences() {
    auto f2 = zn(2);
    std::vector<ChainComplex> acyclic;
    for (int d : {1, 2}) {
        auto v = vec(f2, d);
        acyclic.push_back(make_complex({v, v}, {hom_identity(v)}));
    }
    for (const auto& l : lines(2)) acyclic.push_back(l.sequence);
    std::vector<ShortExactSeq> out;
    for (const auto& c : acyclic) {
        std::vector<ModulePtr> zeros;
        std::vector<ModuleHom> zero_diffs, in;
        for (int n = 0; n <= c.top(); ++n) zeros.push_back(zero_module(f2));
        for (int n = 1; n <= c.top(); ++n) zero_diffs.push_back(hom_zero(zeros[idx(n)], zeros[idx(n - 1)]));
        auto left = make_complex(zeros, zero_diffs);
        for (int n = 0; n <= c.top(); ++n) in.push_back(hom_zero(zeros[idx(n)], c.module(n)));
        out.push_back(make_short_exact_seq(make_complex_map(left, c, in), identity_map(c)));
    }
    return out;
}

Ladder make_ladder(const Cone& c, const std::vector<ModuleHom>& a) {
    std::vector<ModuleHom> u2;
    for (std::size_t n = 0; n < c.u.size(); ++n) u2.push_back(hom_compose(a[n], c.u[n]));
    auto bottom = make_cone(c.dims_y, c.dims_x, u2);
    const auto& l = c.ses.left();
    const auto& m = c.ses.middle();
    const int top = c.ses.top();
    std::vector<ModuleHom> bl, b, br;
    for (int n = 0; n <= top; ++n) {
        const auto& an = n < static_cast<int>(a.size()) ? a[idx(n)] : hom_identity(l.module(n));
        bl.push_back(ModuleHom::trusted(l.module(n), bottom.ses.left().module(n), an.map()));
        const int nx = c.ses.right().module(n)->size();
        std::vector<Elem> map(idx(m.module(n)->size()));
        for (Elem e = 0; e < m.module(n)->size(); ++e) map[idx(e)] = an.map()[idx(e / nx)] * nx + e % nx;
        b.push_back(check_module_hom(m.module(n), bottom.ses.middle().module(n), std::move(map)));
        br.push_back(hom_identity(c.ses.right().module(n)));
    }
    auto beta_left = make_complex_map(l, bottom.ses.left(), bl);
    auto beta = make_complex_map(m, bottom.ses.middle(), b);
    auto beta_right = make_complex_map(c.ses.right(), bottom.ses.right(), br);
    return {c, std::move(bottom), std::move(beta_left), std::move(beta), std::move(beta_right)};
}

ModuleHom random_hom(Rng& rng, const ModulePtr& s, const ModulePtr& t) {
    auto homs = enumerate_module_homs(s, t);
    std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
    return homs[pick(rng)];
}

ChainComplex random_complex(Rng& rng, const RingPtr& ring, int top) {
    std::vector<ModulePtr> pool{ring_as_module(ring), zero_module(ring)};
    if (ring->size() * ring->size() <= 16) pool.push_back(free_module(ring, 2));
    for (Elem g = 1; g < ring->size(); ++g) {
        auto q = quotient_by(ring_as_module(ring), g);
        if (q->size() > 1 && q->size() < ring->size()) pool.push_back(q);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<ModulePtr> modules;
    for (int n = 0; n <= top; ++n) modules.push_back(pool[pick(rng)]);
    std::vector<ModuleHom> diffs;
    for (int n = 1; n <= top; ++n) {
        auto homs = enumerate_module_homs(modules[idx(n)], modules[idx(n - 1)]);
        if (n >= 2)
            std::erase_if(homs, [&](const ModuleHom& h) { return !is_zero_hom(hom_compose(diffs.back(), h)); });
        std::uniform_int_distribution<std::size_t> pd(0, homs.size() - 1);
        diffs.push_back(homs[pd(rng)]);
    }
    return make_complex(std::move(modules), std::move(diffs));
}

ComplexMap random_chain_map(Rng& rng, const ChainComplex& s, const ChainComplex& t) {
    const int top = std::max(s.top(), t.top());
    auto sp = pad_complex(s, top), tp = pad_complex(t, top);
    // A nonzero lower component can leave no compatible choice above it;
    // restart then, and fall back to the zero map.
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<ModuleHom> comps;
        for (int n = 0; n <= top; ++n) {
            auto homs = enumerate_module_homs(sp.module(n), tp.module(n));
            if (n >= 1)
                std::erase_if(homs, [&](const ModuleHom& h) {
                    return hom_compose(tp.diff(n), h).map() != hom_compose(comps.back(), sp.diff(n)).map();
                });
            if (homs.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
            comps.push_back(homs[pick(rng)]);
        }
        if (static_cast<int>(comps.size()) == top + 1) return make_complex_map(sp, tp, std::move(comps));
    }
    return zero_map(sp, tp);
}

ModuleHomotopy random_homotopy(Rng& rng, const ChainComplex& s, const ChainComplex& t) {
    const int top = std::max(s.top(), t.top());
    auto sp = pad_complex(s, top), tp = pad_complex(t, top);
    ModuleHomotopy out;
    for (int n = 0; n <= top; ++n) out.push_back(random_hom(rng, sp.module(n), at_or_zero(tp, n + 1)));
    return out;
}

ComplexMap homotopic_map(const ComplexMap& phi, const ModuleHomotopy& s) {
    const auto& src = phi.source;
    const auto& tgt = phi.target;
    std::vector<ModuleHom> comps;
    for (int n = 0; n <= phi.top(); ++n) {
        auto c = phi.at(n);
        if (n >= 1) c = hom_add(c, hom_compose(s[idx(n - 1)], src.diff(n)));
        if (n < tgt.top()) c = hom_add(c, hom_compose(tgt.diff(n + 1), s[idx(n)]));
        comps.push_back(std::move(c));
    }
    return make_complex_map(src, tgt, std::move(comps));
}

}  // namespace fixtures
