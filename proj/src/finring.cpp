#include "radhom/finring.hpp"

#include <algorithm>

#include "detail/lattice.hpp"
#include "detail/memo.hpp"

namespace radhom {

namespace {

detail::ActionTables tables_of(const FiniteRing& r) { return {r.add_table(), r.mul_table(), r.zero()}; }

bool prime_ideal_elements(const FiniteRing& r, const Subset& s) {
    if (s.count() == r.size()) return false;
    for (Elem a = 0; a < r.size(); ++a) {
        if (s.contains(a)) continue;
        for (Elem b = 0; b < r.size(); ++b)
            if (!s.contains(b) && s.contains(r.mul(a, b))) return false;
    }
    return true;
}

const detail::LatticeMemo& lattice(const FiniteRing& r) {
    auto& memo = r.memo().lattice;
    detail::ensure_lattice(
        memo, [&r] { return detail::enumerate(tables_of(r)); },
        [&r](const Subset& s) { return prime_ideal_elements(r, s); }, Subset::full(r.size()));
    return memo;
}

[[noreturn]] void axiom(const std::string& what) { throw AxiomError("ring axiom violated: " + what); }

}  // namespace

FiniteRing::FiniteRing(Table add, Table mul, Elem zero, Elem one, std::vector<Elem> neg)
    : add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      neg_(std::move(neg)),
      memo_(std::make_shared<detail::RingMemo>()) {}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->same_as(*b)); }

RingPtr make_table_ring(Table add, Table mul, Elem zero, Elem one) {
    const int n = add.rows();
    if (n < 1) throw ShapeError("ring must have at least one element");
    if (add.cols() != n || mul.rows() != n || mul.cols() != n)
        throw ShapeError("ring tables must be square and of equal size");
    add.require_entries_below(n, "add");
    mul.require_entries_below(n, "mul");
    if (zero < 0 || zero >= n || one < 0 || one >= n) throw ShapeError("zero/one out of range");

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add(a, b) != add(b, a)) axiom("add not commutative at " + witness({a, b}));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c))) axiom("add not associative at " + witness({a, b, c}));
    for (Elem a = 0; a < n; ++a)
        if (add(a, zero) != a) axiom("zero is not an additive identity at " + witness({a}));
    std::vector<Elem> neg(static_cast<std::size_t>(n), -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (add(a, b) == zero) {
                neg[static_cast<std::size_t>(a)] = b;
                break;
            }
        if (neg[static_cast<std::size_t>(a)] < 0) axiom("no additive inverse for " + witness({a}));
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (mul(a, b) != mul(b, a)) axiom("mul not commutative at " + witness({a, b}));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) axiom("mul not associative at " + witness({a, b, c}));
    for (Elem a = 0; a < n; ++a)
        if (mul(a, one) != a) axiom("one is not a multiplicative identity at " + witness({a}));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    axiom("mul does not distribute over add at " + witness({a, b, c}));
    for (Elem a = 0; a < n; ++a)
        if (mul(zero, a) != zero) axiom("zero does not absorb at " + witness({a}));

    return RingPtr(new FiniteRing(std::move(add), std::move(mul), zero, one, std::move(neg)));
}

RingPtr make_cyclic_ring(int n) {
    if (n < 1) throw ShapeError("cyclic ring needs n >= 1, got " + std::to_string(n));
    Table add(n, n), mul(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add(a, b) = (a + b) % n;
            mul(a, b) = (a * b) % n;
        }
    return make_table_ring(std::move(add), std::move(mul), 0, n == 1 ? 0 : 1);
}

RingPtr make_product_ring(const RingPtr& a, const RingPtr& b) {
    const int na = a->size(), nb = b->size(), n = na * nb;
    Table add(n, n), mul(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
            add(i, j) = a->add(ia, ja) * nb + b->add(ib, jb);
            mul(i, j) = a->mul(ia, ja) * nb + b->mul(ib, jb);
        }
    return make_table_ring(std::move(add), std::move(mul), a->zero() * nb + b->zero(), a->one() * nb + b->one());
}

IdealSet ideal_generated(const RingPtr& ring, std::span<const Elem> gens) {
    for (Elem g : gens)
        if (g < 0 || g >= ring->size()) throw ShapeError("generator out of range: " + std::to_string(g));
    return {ring, detail::generated(tables_of(*ring), gens)};
}

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
    return {a.ring, detail::sum(tables_of(*a.ring), a.elements, b.elements)};
}

IdealSet ideal_product(const IdealSet& a, const IdealSet& b) {
    const auto& r = *a.ring;
    Subset prods(r.size());
    a.elements.for_each([&](Elem x) { b.elements.for_each([&](Elem y) { prods.insert(r.mul(x, y)); }); });
    return ideal_generated(a.ring, prods.elements());
}

std::vector<IdealSet> enumerate_ideals(const RingPtr& ring) {
    const auto& memo = lattice(*ring);
    std::vector<IdealSet> out;
    out.reserve(memo.members.size());
    for (const auto& m : memo.members) out.push_back({ring, m});
    return out;
}

bool is_prime_ideal(const IdealSet& ideal) { return prime_ideal_elements(*ideal.ring, ideal.elements); }

IdealSet radical_of_ideal(const IdealSet& ideal) {
    const auto& memo = lattice(*ideal.ring);
    int idx = memo.index_of(ideal.elements);
    if (idx < 0) throw PreconditionError("radical_of_ideal: argument is not an ideal");
    return {ideal.ring, memo.members[static_cast<std::size_t>(memo.radical[static_cast<std::size_t>(idx)])]};
}

std::vector<Subset> ideal_lattice(const RingPtr& ring) { return lattice(*ring).members; }

void seed_ideal_lattice(const RingPtr& ring, std::vector<Subset> members) {
    detail::check_seed(tables_of(*ring), members);
    detail::ensure_lattice(
        ring->memo().lattice, [&] { return std::move(members); },
        [&](const Subset& s) { return prime_ideal_elements(*ring, s); }, Subset::full(ring->size()));
}

RadicalIdealSemiring::RadicalIdealSemiring(RingPtr ring, std::vector<IdealSet> elements, SemiringPtr semiring)
    : ring_(std::move(ring)), elements_(std::move(elements)), semiring_(std::move(semiring)) {}

std::optional<Elem> RadicalIdealSemiring::index_of(const IdealSet& ideal) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), ideal);
    if (it == elements_.end() || !(*it == ideal)) return std::nullopt;
    return static_cast<Elem>(it - elements_.begin());
}

RadicalIdealSemiringPtr build_radical_semiring(const RingPtr& ring) {
    const auto& lat = lattice(*ring);
    auto& memo = ring->memo();
    std::call_once(memo.semiring_once, [&] {
        for (std::size_t i = 0; i < lat.members.size(); ++i)
            if (lat.radical[i] == static_cast<int>(i)) memo.radical_members.push_back(static_cast<int>(i));
        const int k = static_cast<int>(memo.radical_members.size());
        std::vector<int> local(lat.members.size(), -1);
        for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(memo.radical_members[static_cast<std::size_t>(i)])] = i;
        auto rad_local = [&](const Subset& s) {
            int idx = lat.index_of(s);
            if (idx < 0) throw InternalConsistencyError("ideal missing from lattice");
            return local[static_cast<std::size_t>(lat.radical[static_cast<std::size_t>(idx)])];
        };
        auto member = [&](int i) {
            return IdealSet{ring, lat.members[static_cast<std::size_t>(memo.radical_members[static_cast<std::size_t>(i)])]};
        };
        Table add(k, k), mul(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                add(i, j) = rad_local(ideal_sum(member(i), member(j)).elements);
                mul(i, j) = rad_local(ideal_product(member(i), member(j)).elements);
            }
        Subset zero_ideal(ring->size());
        zero_ideal.insert(ring->zero());
        Elem zero = rad_local(zero_ideal);
        Elem one = rad_local(Subset::full(ring->size()));
        auto s = std::make_shared<const FiniteSemiring>(std::move(add), std::move(mul), zero, one);
        auto report = verify_semiring_axioms(*s);
        if (!report.ok())
            throw InternalConsistencyError("radical ideal semiring fails " + report.violations.front().law + " at " +
                                           report.violations.front().witness);
        memo.semiring = std::move(s);
    });
    std::vector<IdealSet> elems;
    elems.reserve(memo.radical_members.size());
    for (int i : memo.radical_members) elems.push_back({ring, lat.members[static_cast<std::size_t>(i)]});
    return std::make_shared<const RadicalIdealSemiring>(ring, std::move(elems), memo.semiring);
}

}  // namespace radhom
