#include "radhom/finmodule.hpp"

#include <algorithm>
#include <string>

#include "detail/lattice.hpp"
#include "detail/memo.hpp"

namespace radhom {

namespace {

std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

detail::ActionTables tables_of(const FiniteModule& m) { return {m.add_table(), m.action_table(), m.zero()}; }

bool prime_submodule_elements(const FiniteModule& m, const Subset& n) {
    if (n.count() == m.size()) return false;
    const int k = m.ring()->size();
    for (Elem r = 0; r < k; ++r) {
        bool kills_module = true;
        for (Elem x = 0; x < m.size() && kills_module; ++x) kills_module = n.contains(m.act(r, x));
        if (kills_module) continue;
        for (Elem x = 0; x < m.size(); ++x)
            if (!n.contains(x) && n.contains(m.act(r, x))) return false;
    }
    return true;
}

void fill_lattice(const FiniteModule& m, std::function<std::vector<Subset>()> members) {
    detail::ensure_lattice(
        m.memo().lattice, members, [&m](const Subset& s) { return prime_submodule_elements(m, s); },
        Subset::full(m.size()));
}

const detail::LatticeMemo& lattice(const FiniteModule& m) {
    fill_lattice(m, [&m] { return detail::enumerate(tables_of(m)); });
    return m.memo().lattice;
}

[[noreturn]] void axiom(const std::string& what) { throw AxiomError("module axiom violated: " + what); }

void check_range(const FiniteModule& m, std::span<const Elem> elems, const char* what) {
    for (Elem e : elems)
        if (e < 0 || e >= m.size()) throw ShapeError(std::string(what) + " out of range: " + std::to_string(e));
}

}  // namespace

FiniteModule::FiniteModule(RingPtr ring, Table add, Table action, Elem zero, std::vector<Elem> neg)
    : ring_(std::move(ring)),
      add_(std::move(add)),
      action_(std::move(action)),
      zero_(zero),
      neg_(std::move(neg)),
      memo_(std::make_shared<detail::ModuleMemo>()) {}

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || (a && b && a->same_as(*b)); }

ModulePtr make_module(RingPtr ring, Table add, Table action, Elem zero) {
    if (!ring) throw ShapeError("module needs a ring");
    const int n = add.rows();
    const int k = ring->size();
    if (n < 1) throw ShapeError("module must have at least one element");
    if (add.cols() != n) throw ShapeError("module add table must be square");
    if (action.rows() != k || action.cols() != n) throw ShapeError("module action table must be ring-size x size");
    add.require_entries_below(n, "add");
    action.require_entries_below(n, "action");
    if (zero < 0 || zero >= n) throw ShapeError("module zero out of range");

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add(a, b) != add(b, a)) axiom("add not commutative at " + witness({a, b}));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c))) axiom("add not associative at " + witness({a, b, c}));
    for (Elem a = 0; a < n; ++a)
        if (add(a, zero) != a) axiom("zero is not an additive identity at " + witness({a}));
    std::vector<Elem> neg(idx(n), -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (add(a, b) == zero) {
                neg[idx(a)] = b;
                break;
            }
        if (neg[idx(a)] < 0) axiom("no additive inverse for " + witness({a}));
    }
    for (Elem r = 0; r < k; ++r)
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (action(r, add(a, b)) != add(action(r, a), action(r, b)))
                    axiom("r(m+m') != rm+rm' at " + witness({r, a, b}));
    for (Elem r = 0; r < k; ++r)
        for (Elem q = 0; q < k; ++q)
            for (Elem a = 0; a < n; ++a)
                if (action(ring->add(r, q), a) != add(action(r, a), action(q, a)))
                    axiom("(r+r')m != rm+r'm at " + witness({r, q, a}));
    for (Elem r = 0; r < k; ++r)
        for (Elem q = 0; q < k; ++q)
            for (Elem a = 0; a < n; ++a)
                if (action(ring->mul(r, q), a) != action(r, action(q, a)))
                    axiom("(rr')m != r(r'm) at " + witness({r, q, a}));
    for (Elem a = 0; a < n; ++a)
        if (action(ring->one(), a) != a) axiom("1m != m at " + witness({a}));
    for (Elem a = 0; a < n; ++a)
        if (action(ring->zero(), a) != zero) axiom("0m != 0 at " + witness({a}));

    return ModulePtr(new FiniteModule(std::move(ring), std::move(add), std::move(action), zero, std::move(neg)));
}

ModulePtr ring_as_module(const RingPtr& ring) {
    return make_module(ring, ring->add_table(), ring->mul_table(), ring->zero());
}

ModulePtr zero_module(const RingPtr& ring) { return make_module(ring, Table(1, 1, 0), Table(ring->size(), 1, 0), 0); }

ModulePtr free_module(const RingPtr& ring, int k) {
    if (k < 0) throw ShapeError("free module rank must be non-negative");
    if (k == 0) return zero_module(ring);
    ModulePtr m = ring_as_module(ring);
    for (int i = 1; i < k; ++i) m = direct_sum(ring_as_module(ring), m);
    return m;
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
    if (!same_ring(a->ring(), b->ring())) throw ShapeError("direct_sum: modules over different rings");
    const int na = a->size(), nb = b->size(), n = na * nb, k = a->ring()->size();
    Table add(n, n), act(k, n);
    for (int i = 0; i < n; ++i) {
        const int ia = i / nb, ib = i % nb;
        for (int j = 0; j < n; ++j) add(i, j) = a->add(ia, j / nb) * nb + b->add(ib, j % nb);
        for (int r = 0; r < k; ++r) act(r, i) = a->act(r, ia) * nb + b->act(r, ib);
    }
    return make_module(a->ring(), std::move(add), std::move(act), a->zero() * nb + b->zero());
}

bool is_submodule(const FiniteModule& m, const Subset& s) {
    return s.universe() == m.size() && detail::is_closed(tables_of(m), s);
}

SubmoduleSet make_submodule(const ModulePtr& m, std::span<const Elem> elems) {
    check_range(*m, elems, "submodule element");
    auto s = Subset::of(m->size(), elems);
    if (!s.contains(m->zero())) throw AxiomError("submodule does not contain zero");
    if (!is_submodule(*m, s)) throw AxiomError("submodule not closed under add and the ring action");
    return {m, std::move(s)};
}

SubmoduleSet submodule_generated(const ModulePtr& m, std::span<const Elem> gens) {
    check_range(*m, gens, "generator");
    return {m, detail::generated(tables_of(*m), gens)};
}

SubmoduleSet submodule_sum(const SubmoduleSet& a, const SubmoduleSet& b) {
    return {a.module, detail::sum(tables_of(*a.module), a.elements, b.elements)};
}

SubmoduleSet ideal_times_submodule(const IdealSet& ideal, const SubmoduleSet& n) {
    const auto& m = *n.module;
    Subset prods(m.size());
    ideal.elements.for_each([&](Elem r) { n.elements.for_each([&](Elem x) { prods.insert(m.act(r, x)); }); });
    return {n.module, detail::generated(tables_of(m), prods.elements())};
}

std::vector<SubmoduleSet> enumerate_submodules(const ModulePtr& m) {
    const auto& lat = lattice(*m);
    std::vector<SubmoduleSet> out;
    out.reserve(lat.members.size());
    for (const auto& s : lat.members) out.push_back({m, s});
    return out;
}

bool is_prime_submodule(const SubmoduleSet& n) { return prime_submodule_elements(*n.module, n.elements); }

SubmoduleSet radical_of_submodule(const SubmoduleSet& n) {
    const auto& lat = lattice(*n.module);
    int i = lat.index_of(n.elements);
    if (i < 0) throw PreconditionError("radical_of_submodule: argument is not a submodule");
    return {n.module, lat.members[idx(lat.radical[idx(i)])]};
}

bool is_radical_module(const ModulePtr& m) {
    Subset z(m->size());
    z.insert(m->zero());
    auto rad = radical_of_submodule({m, z});
    // The zero module is radical by convention: rad({0}) = M = {0}.
    return rad.elements == z;
}

std::vector<Subset> submodule_lattice(const ModulePtr& m) { return lattice(*m).members; }

void seed_submodule_lattice(const ModulePtr& m, std::vector<Subset> members) {
    detail::check_seed(tables_of(*m), members);
    fill_lattice(*m, [&] { return std::move(members); });
}

// ---------------------------------------------------------------------------

Report module_hom_violations(const FiniteModule& source, const FiniteModule& target, std::span<const Elem> map) {
    Report rep;
    if (!same_ring(source.ring(), target.ring())) {
        rep.add("same ring", "");
        return rep;
    }
    if (static_cast<int>(map.size()) != source.size()) {
        rep.add("map is total", "length " + std::to_string(map.size()) + " != " + std::to_string(source.size()));
        return rep;
    }
    for (Elem x : map)
        if (x < 0 || x >= target.size()) {
            rep.add("map values in target", witness({x}));
            return rep;
        }
    auto f = [&](Elem x) { return map[idx(x)]; };
    for (Elem a = 0; a < source.size() && rep.ok(); ++a)
        for (Elem b = 0; b < source.size(); ++b)
            if (f(source.add(a, b)) != target.add(f(a), f(b))) {
                rep.add("additivity", witness({a, b}));
                break;
            }
    for (Elem r = 0; r < source.ring()->size() && rep.ok(); ++r)
        for (Elem a = 0; a < source.size(); ++a)
            if (f(source.act(r, a)) != target.act(r, f(a))) {
                rep.add("commutes with the action", witness({r, a}));
                break;
            }
    return rep;
}

ModuleHom check_module_hom(const ModulePtr& source, const ModulePtr& target, std::vector<Elem> map) {
    if (!same_ring(source->ring(), target->ring())) throw ShapeError("module hom endpoints over different rings");
    if (static_cast<int>(map.size()) != source->size())
        throw ShapeError("module hom map has length " + std::to_string(map.size()) + ", expected " +
                         std::to_string(source->size()));
    check_range(*target, map, "module hom value");
    auto rep = module_hom_violations(*source, *target, map);
    if (!rep.ok())
        throw AxiomError("module hom violates " + rep.violations.front().law + " at " + rep.violations.front().witness);
    return ModuleHom::trusted(source, target, std::move(map));
}

ModuleHom hom_identity(const ModulePtr& m) {
    std::vector<Elem> map(idx(m->size()));
    for (Elem x = 0; x < m->size(); ++x) map[idx(x)] = x;
    return ModuleHom::trusted(m, m, std::move(map));
}

ModuleHom hom_zero(const ModulePtr& source, const ModulePtr& target) {
    if (!same_ring(source->ring(), target->ring())) throw ShapeError("hom_zero: modules over different rings");
    return ModuleHom::trusted(source, target, std::vector<Elem>(idx(source->size()), target->zero()));
}

ModuleHom hom_compose(const ModuleHom& g, const ModuleHom& f) {
    if (!same_module(f.target(), g.source())) throw ShapeError("hom_compose: target of f is not the source of g");
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f.map()[i]);
    return ModuleHom::trusted(f.source(), g.target(), std::move(map));
}

ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g) {
    if (!same_module(f.source(), g.source()) || !same_module(f.target(), g.target()))
        throw ShapeError("hom_add: homs have different endpoints");
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = f.target()->add(f.map()[i], g.map()[i]);
    return ModuleHom::trusted(f.source(), f.target(), std::move(map));
}

ModuleHom hom_negate(const ModuleHom& f) {
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = f.target()->neg(f.map()[i]);
    return ModuleHom::trusted(f.source(), f.target(), std::move(map));
}

ModuleHom hom_scale(Elem r, const ModuleHom& f) {
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = f.target()->act(r, f.map()[i]);
    return ModuleHom::trusted(f.source(), f.target(), std::move(map));
}

bool is_zero_hom(const ModuleHom& f) {
    return std::ranges::all_of(f.map(), [&](Elem y) { return y == f.target()->zero(); });
}

SubmoduleSet hom_image(const ModuleHom& f) {
    Subset im(f.target()->size());
    for (Elem y : f.map()) im.insert(y);
    if (!is_submodule(*f.target(), im)) throw InternalConsistencyError("image is not a submodule");
    return {f.target(), std::move(im)};
}

SubmoduleSet hom_kernel(const ModuleHom& f) {
    Subset k(f.source()->size());
    for (Elem x = 0; x < f.source()->size(); ++x)
        if (f(x) == f.target()->zero()) k.insert(x);
    return {f.source(), std::move(k)};
}

SubmoduleSet hom_apply(const ModuleHom& f, const SubmoduleSet& n) {
    Subset im(f.target()->size());
    n.elements.for_each([&](Elem x) { im.insert(f(x)); });
    if (!is_submodule(*f.target(), im)) throw InternalConsistencyError("image of a submodule is not a submodule");
    return {f.target(), std::move(im)};
}

QuotientModule quotient_module(const SubmoduleSet& n) {
    const auto& m = *n.module;
    if (!is_submodule(m, n.elements)) throw PreconditionError("quotient_module: not a submodule");
    std::vector<int> coset(idx(m.size()), -1);
    std::vector<Elem> reps;
    auto ks = n.sorted();
    for (Elem x = 0; x < m.size(); ++x) {
        if (coset[idx(x)] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elem k : ks) coset[idx(m.add(x, k))] = c;
    }
    const int q = static_cast<int>(reps.size()), rk = m.ring()->size();
    Table add(q, q), act(rk, q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) add(i, j) = coset[idx(m.add(reps[idx(i)], reps[idx(j)]))];
        for (int r = 0; r < rk; ++r) act(r, i) = coset[idx(m.act(r, reps[idx(i)]))];
    }
    auto qm = make_module(m.ring(), std::move(add), std::move(act), coset[idx(m.zero())]);
    auto proj = ModuleHom::trusted(n.module, qm, std::move(coset));
    return {qm, std::move(proj), std::move(reps)};
}

SubmoduleAsModule submodule_as_module(const SubmoduleSet& n) {
    const auto& m = *n.module;
    if (!is_submodule(m, n.elements)) throw PreconditionError("submodule_as_module: not a submodule");
    auto embed = n.sorted();
    std::vector<int> local(idx(m.size()), -1);
    const int k = static_cast<int>(embed.size()), rk = m.ring()->size();
    for (int i = 0; i < k; ++i) local[idx(embed[idx(i)])] = i;
    Table add(k, k), act(rk, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) add(i, j) = local[idx(m.add(embed[idx(i)], embed[idx(j)]))];
        for (int r = 0; r < rk; ++r) act(r, i) = local[idx(m.act(r, embed[idx(i)]))];
    }
    auto sm = make_module(m.ring(), std::move(add), std::move(act), local[idx(m.zero())]);
    return {sm, ModuleHom::trusted(sm, n.module, std::move(embed))};
}

namespace {

struct Partial {
    std::vector<Elem> map;
    std::vector<Elem> assigned;
};

bool extend(const FiniteModule& src, const FiniteModule& tgt, Partial& p, Elem x, Elem v) {
    std::vector<Elem> work;
    auto set = [&](Elem a, Elem va) {
        Elem& cur = p.map[idx(a)];
        if (cur < 0) {
            cur = va;
            p.assigned.push_back(a);
            work.push_back(a);
            return true;
        }
        return cur == va;
    };
    if (!set(x, v)) return false;
    const int scalars = src.ring()->size();
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        Elem va = p.map[idx(a)];
        for (Elem r = 0; r < scalars; ++r)
            if (!set(src.act(r, a), tgt.act(r, va))) return false;
        for (std::size_t i = 0; i < p.assigned.size(); ++i) {
            Elem b = p.assigned[i];
            if (!set(src.add(a, b), tgt.add(va, p.map[idx(b)]))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<ModuleHom> enumerate_module_homs(const ModulePtr& source, const ModulePtr& target, std::size_t bound) {
    if (!same_ring(source->ring(), target->ring())) throw ShapeError("enumerate_module_homs: different rings");
    std::vector<Elem> gens;
    Subset reached = submodule_generated(source, gens).elements;
    for (Elem x = 0; x < source->size(); ++x)
        if (!reached.contains(x)) {
            gens.push_back(x);
            reached = submodule_generated(source, gens).elements;
        }
    std::vector<ModuleHom> out;
    Partial start{std::vector<Elem>(idx(source->size()), -1), {}};
    if (!extend(*source, *target, start, source->zero(), target->zero())) return out;
    std::size_t candidates = 0;
    auto dfs = [&](auto&& self, const Partial& p, std::size_t depth) -> void {
        if (depth == gens.size()) {
            out.push_back(ModuleHom::trusted(source, target, p.map));
            return;
        }
        for (Elem v = 0; v < target->size(); ++v) {
            if (++candidates > bound)
                throw SearchBoundExceeded("module hom enumeration exceeded " + std::to_string(bound) + " candidates");
            Partial next = p;
            if (extend(*source, *target, next, gens[depth], v)) self(self, next, depth + 1);
        }
    };
    dfs(dfs, start, 0);
    std::ranges::sort(out, [](const ModuleHom& a, const ModuleHom& b) { return a.map() < b.map(); });
    return out;
}

}  // namespace radhom
