#include "radhom/semicore.hpp"

#include <algorithm>
#include <string>

namespace radhom {

namespace {

std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

Subset closure(const FiniteSemimodule& m, std::span<const Elem> gens) {
    Subset in(m.size());
    std::vector<Elem> members;
    auto push = [&](Elem x) {
        if (!in.contains(x)) {
            in.insert(x);
            members.push_back(x);
        }
    };
    push(m.zero());
    for (Elem g : gens) push(g);
    const int scalars = m.scalars()->size();
    for (std::size_t i = 0; i < members.size(); ++i) {
        Elem x = members[i];
        for (Elem r = 0; r < scalars; ++r) push(m.act(r, x));
        for (std::size_t j = 0; j <= i; ++j) push(m.add(x, members[j]));
    }
    return in;
}

// x + N for every x, as one subset per element.
std::vector<Subset> translates(const FiniteSemimodule& m, const Subset& n) {
    std::vector<Subset> out;
    out.reserve(idx(m.size()));
    auto ks = n.elements();
    for (Elem x = 0; x < m.size(); ++x) {
        Subset t(m.size());
        for (Elem k : ks) t.insert(m.add(x, k));
        out.push_back(std::move(t));
    }
    return out;
}

bool intersects(const Subset& a, const Subset& b) { return !(a & b).empty(); }

void check_range(const FiniteSemimodule& m, std::span<const Elem> elems, const char* what) {
    for (Elem e : elems)
        if (e < 0 || e >= m.size()) throw ShapeError(std::string(what) + " out of range: " + std::to_string(e));
}

}  // namespace

FiniteSemimodule::FiniteSemimodule(SemiringPtr scalars, Table add, Table action, Elem zero)
    : scalars_(std::move(scalars)), add_(std::move(add)), action_(std::move(action)), zero_(zero) {
    if (!scalars_) throw ShapeError("semimodule needs a scalar semiring");
    const int n = add_.rows();
    if (n < 1) throw ShapeError("semimodule must have at least one element");
    if (add_.cols() != n) throw ShapeError("semimodule add table must be square");
    if (action_.rows() != scalars_->size() || action_.cols() != n)
        throw ShapeError("semimodule action table must be scalars x elements");
    add_.require_entries_below(n, "add");
    action_.require_entries_below(n, "action");
    if (zero_ < 0 || zero_ >= n) throw ShapeError("semimodule zero out of range");
}

bool same_semimodule(const SemimodulePtr& a, const SemimodulePtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

SemimodulePtr semiring_as_semimodule(const SemiringPtr& s) {
    return std::make_shared<const FiniteSemimodule>(s, s->add_table(), s->mul_table(), s->zero());
}

SemimodulePtr zero_semimodule(const SemiringPtr& s) {
    return std::make_shared<const FiniteSemimodule>(s, Table(1, 1, 0), Table(s->size(), 1, 0), 0);
}

Report verify_semimodule_axioms(const FiniteSemimodule& m) {
    Report rep;
    const int n = m.size();
    const auto& s = *m.scalars();
    const int k = s.size();
    auto first = [&rep](const std::string& law) {
        for (const auto& v : rep.violations)
            if (v.law == law) return false;
        return true;
    };
    auto fail = [&](const std::string& law, std::initializer_list<Elem> w) {
        if (first(law)) rep.add(law, witness(w));
    };

    for (Elem a = 0; a < n; ++a) {
        if (m.add(a, m.zero()) != a) fail("add identity", {a});
        for (Elem b = 0; b < n; ++b) {
            if (m.add(a, b) != m.add(b, a)) fail("add commutative", {a, b});
            for (Elem c = 0; c < n; ++c)
                if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) fail("add associative", {a, b, c});
        }
    }
    for (Elem r = 0; r < k; ++r) {
        if (m.act(r, m.zero()) != m.zero()) fail("scalar kills zero", {r});
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (m.act(r, m.add(a, b)) != m.add(m.act(r, a), m.act(r, b))) fail("action distributes over add", {r, a, b});
    }
    for (Elem r = 0; r < k; ++r)
        for (Elem q = 0; q < k; ++q)
            for (Elem a = 0; a < n; ++a) {
                if (m.act(s.add(r, q), a) != m.add(m.act(r, a), m.act(q, a))) fail("scalar add distributes", {r, q, a});
                if (m.act(s.mul(r, q), a) != m.act(r, m.act(q, a))) fail("action associative", {r, q, a});
            }
    for (Elem a = 0; a < n; ++a) {
        if (m.act(s.one(), a) != a) fail("one acts trivially", {a});
        if (m.act(s.zero(), a) != m.zero()) fail("zero scalar annihilates", {a});
    }
    return rep;
}

bool is_subsemimodule(const FiniteSemimodule& m, const Subset& s) {
    if (s.universe() != m.size() || !s.contains(m.zero())) return false;
    auto xs = s.elements();
    for (Elem x : xs) {
        for (Elem y : xs)
            if (!s.contains(m.add(x, y))) return false;
        for (Elem r = 0; r < m.scalars()->size(); ++r)
            if (!s.contains(m.act(r, x))) return false;
    }
    return true;
}

SubSemimodule make_subsemimodule(const SemimodulePtr& m, std::span<const Elem> elems) {
    check_range(*m, elems, "subsemimodule element");
    auto s = Subset::of(m->size(), elems);
    if (!s.contains(m->zero())) throw AxiomError("subsemimodule does not contain zero");
    if (!is_subsemimodule(*m, s)) throw AxiomError("subsemimodule not closed under add and action");
    return {m, std::move(s)};
}

SubSemimodule subsemimodule_generated(const SemimodulePtr& m, std::span<const Elem> gens) {
    check_range(*m, gens, "generator");
    return {m, closure(*m, gens)};
}

SubSemimodule whole(const SemimodulePtr& m) { return {m, Subset::full(m->size())}; }

SubSemimodule zero_sub(const SemimodulePtr& m) {
    Subset s(m->size());
    s.insert(m->zero());
    return {m, std::move(s)};
}

Restriction restrict_to(const SubSemimodule& sub) {
    const auto& m = *sub.parent;
    Restriction out;
    out.embed = sub.sorted();
    out.local.assign(idx(m.size()), -1);
    const int k = static_cast<int>(out.embed.size());
    for (int i = 0; i < k; ++i) out.local[idx(out.embed[idx(i)])] = i;
    const int scalars = m.scalars()->size();
    Table add(k, k), act(scalars, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) add(i, j) = out.local[idx(m.add(out.embed[idx(i)], out.embed[idx(j)]))];
        for (int r = 0; r < scalars; ++r) act(r, i) = out.local[idx(m.act(r, out.embed[idx(i)]))];
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (add(i, j) < 0) throw PreconditionError("restrict_to: subset not closed under add");
    for (int r = 0; r < scalars; ++r)
        for (int i = 0; i < k; ++i)
            if (act(r, i) < 0) throw PreconditionError("restrict_to: subset not closed under action");
    out.semimodule = std::make_shared<const FiniteSemimodule>(m.scalars(), std::move(add), std::move(act),
                                                              out.local[idx(m.zero())]);
    return out;
}

std::optional<std::pair<Elem, Elem>> subtractive_counterexample(const SubSemimodule& n) {
    const auto& m = *n.parent;
    auto ks = n.sorted();
    for (Elem x = 0; x < m.size(); ++x) {
        if (n.contains(x)) continue;
        for (Elem k : ks)
            if (n.contains(m.add(x, k))) return std::pair{x, k};
    }
    return std::nullopt;
}

Report semi_hom_violations(const FiniteSemimodule& source, const FiniteSemimodule& target, std::span<const Elem> map) {
    Report rep;
    if (static_cast<int>(map.size()) != source.size()) {
        rep.add("map is total", "length " + std::to_string(map.size()) + " != " + std::to_string(source.size()));
        return rep;
    }
    for (Elem x : map)
        if (x < 0 || x >= target.size()) {
            rep.add("map values in target", witness({x}));
            return rep;
        }
    if (!same_semiring(source.scalars(), target.scalars())) {
        rep.add("same scalars", "");
        return rep;
    }
    auto f = [&](Elem x) { return map[idx(x)]; };
    if (f(source.zero()) != target.zero()) rep.add("preserves zero", witness({source.zero()}));
    for (Elem a = 0; a < source.size() && rep.ok(); ++a)
        for (Elem b = 0; b < source.size(); ++b)
            if (f(source.add(a, b)) != target.add(f(a), f(b))) {
                rep.add("preserves add", witness({a, b}));
                break;
            }
    for (Elem r = 0; r < source.scalars()->size() && rep.ok(); ++r)
        for (Elem a = 0; a < source.size(); ++a)
            if (f(source.act(r, a)) != target.act(r, f(a))) {
                rep.add("preserves action", witness({r, a}));
                break;
            }
    return rep;
}

SemiHom check_semi_hom(const SemimodulePtr& source, const SemimodulePtr& target, std::vector<Elem> map) {
    auto rep = semi_hom_violations(*source, *target, map);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw AxiomError("semimodule hom violates " + v.law + (v.witness.empty() ? "" : " at " + v.witness));
    }
    return SemiHom::trusted(source, target, std::move(map));
}

SemiHom semi_identity(const SemimodulePtr& m) {
    std::vector<Elem> map(idx(m->size()));
    for (Elem x = 0; x < m->size(); ++x) map[idx(x)] = x;
    return SemiHom::trusted(m, m, std::move(map));
}

SemiHom semi_zero(const SemimodulePtr& source, const SemimodulePtr& target) {
    return SemiHom::trusted(source, target, std::vector<Elem>(idx(source->size()), target->zero()));
}

SemiHom semi_compose(const SemiHom& g, const SemiHom& f) {
    if (!same_semimodule(f.target(), g.source())) throw ShapeError("compose: target of f is not the source of g");
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f.map()[i]);
    return SemiHom::trusted(f.source(), g.target(), std::move(map));
}

SemiHom semi_add(const SemiHom& f, const SemiHom& g) {
    if (!same_semimodule(f.source(), g.source()) || !same_semimodule(f.target(), g.target()))
        throw ShapeError("add: homs have different endpoints");
    std::vector<Elem> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = f.target()->add(f.map()[i], g.map()[i]);
    return SemiHom::trusted(f.source(), f.target(), std::move(map));
}

bool is_injective(const SemiHom& h) {
    Subset seen(h.target()->size());
    for (Elem y : h.map()) {
        if (seen.contains(y)) return false;
        seen.insert(y);
    }
    return true;
}

bool is_surjective(const SemiHom& h) {
    Subset seen(h.target()->size());
    for (Elem y : h.map()) seen.insert(y);
    return seen.count() == h.target()->size();
}

bool is_zero_hom(const SemiHom& h) {
    return std::ranges::all_of(h.map(), [&](Elem y) { return y == h.target()->zero(); });
}

SubSemimodule kernel(const SemiHom& h) {
    Subset k(h.source()->size());
    for (Elem x = 0; x < h.source()->size(); ++x)
        if (h(x) == h.target()->zero()) k.insert(x);
    if (!is_subsemimodule(*h.source(), k)) throw InternalConsistencyError("kernel is not a subsemimodule");
    return {h.source(), std::move(k)};
}

SubSemimodule image(const SemiHom& h) {
    Subset im(h.target()->size());
    for (Elem y : h.map()) im.insert(y);
    if (!is_subsemimodule(*h.target(), im)) throw InternalConsistencyError("image is not a subsemimodule");
    return {h.target(), std::move(im)};
}

std::optional<std::pair<Elem, Elem>> steady_counterexample(const SemiHom& h) {
    const auto& m = *h.source();
    auto ker = kernel(h);
    auto tr = translates(m, ker.elements);
    for (Elem a = 0; a < m.size(); ++a)
        for (Elem b = a + 1; b < m.size(); ++b)
            if (h(a) == h(b) && !intersects(tr[idx(a)], tr[idx(b)])) return std::pair{a, b};
    return std::nullopt;
}

bool is_exact_at(const SemiHom& f, const SemiHom& g) {
    if (!same_semimodule(f.target(), g.source())) throw ShapeError("is_exact_at: target of f is not the source of g");
    return image(f).elements == kernel(g).elements;
}

BourneQuotient bourne_quotient(const SemimodulePtr& m, const SubSemimodule& n) {
    if (!is_subsemimodule(*m, n.elements)) throw PreconditionError("bourne_quotient: not a subsemimodule");
    const int size = m->size();
    auto tr = translates(*m, n.elements);

    std::vector<Subset> related(idx(size), Subset(size));
    for (Elem x = 0; x < size; ++x)
        for (Elem y = x; y < size; ++y)
            if (intersects(tr[idx(x)], tr[idx(y)])) {
                related[idx(x)].insert(y);
                related[idx(y)].insert(x);
            }
    for (Elem x = 0; x < size; ++x) {
        if (!related[idx(x)].contains(x)) throw InternalConsistencyError("Bourne relation not reflexive");
        related[idx(x)].for_each([&](Elem y) {
            if (!related[idx(y)].is_subset_of(related[idx(x)]))
                throw InternalConsistencyError("Bourne relation not transitive at " + witness({x, y}));
        });
    }

    BourneQuotient q{m, n, {}, {}, std::vector<int>(idx(size), -1), nullptr};
    for (Elem x = 0; x < size; ++x) {
        if (q.class_of[idx(x)] >= 0) continue;
        const int c = q.class_count();
        auto members = related[idx(x)].elements();
        for (Elem y : members) q.class_of[idx(y)] = c;
        q.reps.push_back(x);
        q.classes.push_back(std::move(members));
    }

    const int k = q.class_count();
    const int scalars = m->scalars()->size();
    Table add(k, k), act(scalars, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int c = q.class_of[idx(m->add(q.reps[idx(i)], q.reps[idx(j)]))];
            for (Elem x : q.classes[idx(i)])
                for (Elem y : q.classes[idx(j)])
                    if (q.class_of[idx(m->add(x, y))] != c)
                        throw InternalConsistencyError("Bourne quotient add depends on representatives at " +
                                                       witness({x, y}));
            add(i, j) = c;
        }
        for (Elem r = 0; r < scalars; ++r) {
            const int c = q.class_of[idx(m->act(r, q.reps[idx(i)]))];
            for (Elem x : q.classes[idx(i)])
                if (q.class_of[idx(m->act(r, x))] != c)
                    throw InternalConsistencyError("Bourne quotient action depends on representatives at " +
                                                   witness({r, x}));
            act(r, i) = c;
        }
    }
    q.quotient = std::make_shared<const FiniteSemimodule>(m->scalars(), std::move(add), std::move(act),
                                                          q.class_of[idx(m->zero())]);
    return q;
}

std::vector<Elem> generating_set(const SemimodulePtr& m) {
    std::vector<Elem> gens;
    Subset reached = closure(*m, gens);
    for (Elem x = 0; x < m->size(); ++x) {
        if (reached.contains(x)) continue;
        gens.push_back(x);
        reached = closure(*m, gens);
    }
    return gens;
}

namespace {

// Partial assignment for hom enumeration, closed under the consequences of
// the hom laws on the elements assigned so far.
struct Partial {
    std::vector<Elem> map;
    std::vector<Elem> assigned;
};

bool extend(const FiniteSemimodule& src, const FiniteSemimodule& tgt, Partial& p, Elem x, Elem v) {
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
    const int scalars = src.scalars()->size();
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        Elem va = p.map[idx(a)];
        for (Elem r = 0; r < scalars; ++r)
            if (!set(src.act(r, a), tgt.act(r, va))) return false;
        // Index loop: `assigned` may grow while we scan it.
        for (std::size_t i = 0; i < p.assigned.size(); ++i) {
            Elem b = p.assigned[i];
            if (!set(src.add(a, b), tgt.add(va, p.map[idx(b)]))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<SemiHom> enumerate_homs(const SemimodulePtr& source, const SemimodulePtr& target, const SearchOptions& opts) {
    if (!same_semiring(source->scalars(), target->scalars())) throw ShapeError("enumerate_homs: different scalars");
    const auto gens = generating_set(source);
    std::vector<SemiHom> out;
    Partial start{std::vector<Elem>(idx(source->size()), -1), {}};
    if (!extend(*source, *target, start, source->zero(), target->zero())) return out;

    std::size_t candidates = 0;
    auto dfs = [&](auto&& self, const Partial& p, std::size_t depth) -> void {
        if (depth == gens.size()) {
            out.push_back(SemiHom::trusted(source, target, p.map));
            return;
        }
        for (Elem v = 0; v < target->size(); ++v) {
            if (++candidates > opts.hom_bound)
                throw SearchBoundExceeded("hom enumeration exceeded " + std::to_string(opts.hom_bound) + " candidates");
            Partial next = p;
            if (extend(*source, *target, next, gens[depth], v)) self(self, next, depth + 1);
        }
    };
    dfs(dfs, start, 0);
    std::ranges::sort(out, [](const SemiHom& a, const SemiHom& b) { return a.map() < b.map(); });
    for (const auto& h : out)
        if (!semi_hom_violations(*source, *target, h.map()).ok())
            throw InternalConsistencyError("hom enumeration produced a non-hom");
    return out;
}

Elem FreeSemimodule::coordinate(Elem x, int a) const {
    const int base = semimodule->scalars()->size();
    for (int i = 0; i < a; ++i) x /= base;
    return x % base;
}

FreeSemimodule free_semimodule(const SemiringPtr& s, int rank, int size_cap) {
    if (rank < 0) throw ShapeError("free semimodule rank must be non-negative");
    const long base = s->size();
    long size = 1;
    for (int i = 0; i < rank; ++i) {
        size *= base;
        if (size > size_cap)
            throw ShapeError("free semimodule of rank " + std::to_string(rank) + " exceeds size cap " +
                             std::to_string(size_cap));
    }
    const int n = static_cast<int>(size);
    auto digits = [&](int x) {
        std::vector<Elem> d(idx(rank));
        for (int i = 0; i < rank; ++i, x /= static_cast<int>(base)) d[idx(i)] = x % static_cast<int>(base);
        return d;
    };
    auto encode = [&](const std::vector<Elem>& d) {
        int x = 0;
        for (int i = rank - 1; i >= 0; --i) x = x * static_cast<int>(base) + d[idx(i)];
        return x;
    };
    Table add(n, n), act(s->size(), n);
    for (int x = 0; x < n; ++x) {
        auto dx = digits(x);
        for (int y = 0; y < n; ++y) {
            auto dy = digits(y);
            std::vector<Elem> d(idx(rank));
            for (int i = 0; i < rank; ++i) d[idx(i)] = s->add(dx[idx(i)], dy[idx(i)]);
            add(x, y) = encode(d);
        }
        for (Elem r = 0; r < s->size(); ++r) {
            std::vector<Elem> d(idx(rank));
            for (int i = 0; i < rank; ++i) d[idx(i)] = s->mul(r, dx[idx(i)]);
            act(r, x) = encode(d);
        }
    }
    std::vector<Elem> zero_digits(idx(rank), s->zero());
    FreeSemimodule f;
    f.rank = rank;
    for (int a = 0; a < rank; ++a) {
        auto d = zero_digits;
        d[idx(a)] = s->one();
        f.basis.push_back(encode(d));
    }
    f.semimodule = std::make_shared<const FiniteSemimodule>(s, std::move(add), std::move(act), encode(zero_digits));
    return f;
}

SemiHom hom_from_basis(const FreeSemimodule& free, const SemimodulePtr& target, std::span<const Elem> assignment) {
    if (static_cast<int>(assignment.size()) != free.rank) throw ShapeError("hom_from_basis: assignment size != rank");
    check_range(*target, assignment, "basis image");
    const auto& src = free.semimodule;
    std::vector<Elem> map(idx(src->size()));
    for (Elem x = 0; x < src->size(); ++x) {
        Elem y = target->zero();
        for (int a = 0; a < free.rank; ++a) y = target->add(y, target->act(free.coordinate(x, a), assignment[idx(a)]));
        map[idx(x)] = y;
    }
    if (!semi_hom_violations(*src, *target, map).ok())
        throw InternalConsistencyError("extension from a basis is not a hom");
    return SemiHom::trusted(src, target, std::move(map));
}

bool RetractSearch::any_bound_exceeded() const {
    return std::ranges::any_of(attempts, [](const Attempt& a) { return a.outcome == Outcome::bound_exceeded; });
}

RetractSearch is_retract_of_free(const SemimodulePtr& m, int max_basis, const SearchOptions& opts) {
    if (max_basis < 1) throw ShapeError("is_retract_of_free: max_basis must be >= 1");
    RetractSearch result;
    const auto& s = m->scalars();
    for (int rank = 1; rank <= max_basis; ++rank) {
        FreeSemimodule free;
        std::vector<SemiHom> injections;
        try {
            free = free_semimodule(s, rank, opts.free_size_cap);
            for (auto& h : enumerate_homs(m, free.semimodule, opts))
                if (is_injective(h)) injections.push_back(std::move(h));
        } catch (const ShapeError&) {
            result.attempts.push_back({rank, RetractSearch::Outcome::bound_exceeded});
            continue;
        } catch (const SearchBoundExceeded&) {
            result.attempts.push_back({rank, RetractSearch::Outcome::bound_exceeded});
            continue;
        }

        // phi is determined by the basis images; odometer over m^rank in
        // lexicographic order of the assignment.
        std::vector<Elem> assignment(idx(rank), 0);
        std::size_t candidates = 0;
        bool exceeded = false;
        auto phi_at = [&](Elem x) {
            Elem y = m->zero();
            for (int a = 0; a < rank; ++a) y = m->add(y, m->act(free.coordinate(x, a), assignment[idx(a)]));
            return y;
        };
        for (bool more = true; more && !result.witness && !exceeded;) {
            for (const auto& psi : injections) {
                if (++candidates > opts.hom_bound) {
                    exceeded = true;
                    break;
                }
                bool ok = true;
                for (Elem x = 0; x < m->size() && ok; ++x) ok = phi_at(psi(x)) == x;
                if (ok) {
                    auto phi = hom_from_basis(free, m, assignment);
                    result.witness = RetractWitness{free, std::move(phi), psi};
                    break;
                }
            }
            int pos = rank - 1;
            while (pos >= 0 && ++assignment[idx(pos)] == m->size()) assignment[idx(pos--)] = 0;
            more = pos >= 0;
        }
        if (result.witness) {
            result.attempts.push_back({rank, RetractSearch::Outcome::found});
            break;
        }
        result.attempts.push_back(
            {rank, exceeded ? RetractSearch::Outcome::bound_exceeded : RetractSearch::Outcome::none_at_size});
    }
    return result;
}

std::optional<SemiHom> find_isomorphism(const SemimodulePtr& a, const SemimodulePtr& b, const SearchOptions& opts) {
    if (a->size() != b->size() || !same_semiring(a->scalars(), b->scalars())) return std::nullopt;
    for (auto& h : enumerate_homs(a, b, opts))
        if (is_injective(h)) return std::move(h);
    return std::nullopt;
}

}  // namespace radhom
