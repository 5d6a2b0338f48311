#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "radhom/semiring.hpp"
#include "radhom/subset.hpp"
#include "radhom/table.hpp"

namespace radhom {

namespace detail {
struct RingMemo;
}

/// Finite commutative ring with identity, elements {0, ..., size-1}.
///
/// Instances are immutable and only obtainable through the validating
/// factories below. The ideal lattice is computed lazily once per ring.
class FiniteRing {
public:
    int size() const { return add_.rows(); }
    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem mul(Elem a, Elem b) const { return mul_(a, b); }
    Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const Table& add_table() const { return add_; }
    const Table& mul_table() const { return mul_; }

    /// Same tables and distinguished elements.
    bool same_as(const FiniteRing& o) const {
        return add_ == o.add_ && mul_ == o.mul_ && zero_ == o.zero_ && one_ == o.one_;
    }

    detail::RingMemo& memo() const { return *memo_; }

private:
    friend std::shared_ptr<const FiniteRing> make_table_ring(Table, Table, Elem, Elem);
    FiniteRing(Table add, Table mul, Elem zero, Elem one, std::vector<Elem> neg);

    Table add_;
    Table mul_;
    Elem zero_;
    Elem one_;
    std::vector<Elem> neg_;
    std::shared_ptr<detail::RingMemo> memo_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Integers modulo n. Throws ShapeError for n < 1.
RingPtr make_cyclic_ring(int n);

/// Componentwise product; the pair (i, j) has index i * |b| + j.
RingPtr make_product_ring(const RingPtr& a, const RingPtr& b);

/// Validates every ring axiom; throws AxiomError naming the first violation.
RingPtr make_table_ring(Table add, Table mul, Elem zero, Elem one);

/// Ideal of a finite ring, stored as an element set.
struct IdealSet {
    RingPtr ring;
    Subset elements;

    std::vector<Elem> sorted() const { return elements.elements(); }
    bool is_whole() const { return elements.count() == ring->size(); }

    bool operator==(const IdealSet& o) const { return elements == o.elements; }
    std::strong_ordering operator<=>(const IdealSet& o) const { return elements <=> o.elements; }
};

IdealSet ideal_generated(const RingPtr& ring, std::span<const Elem> gens);
IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_product(const IdealSet& a, const IdealSet& b);

/// All ideals in canonical (lexicographic) order.
std::vector<IdealSet> enumerate_ideals(const RingPtr& ring);

/// Proper, and ab in I forces a in I or b in I.
bool is_prime_ideal(const IdealSet& ideal);

/// Intersection of the prime ideals containing the ideal; whole ring if none.
IdealSet radical_of_ideal(const IdealSet& ideal);

/// Canonical ideal list as raw subsets, for persistence.
std::vector<Subset> ideal_lattice(const RingPtr& ring);
/// Installs a previously computed canonical list; no effect once computed.
/// Throws ShapeError if the list is out of order or holds a non-ideal.
void seed_ideal_lattice(const RingPtr& ring, std::vector<Subset> members);

/// The semiring of radical ideals with I+J := rad(I+J), I*J := rad(IJ).
class RadicalIdealSemiring {
public:
    RadicalIdealSemiring(RingPtr ring, std::vector<IdealSet> elements, SemiringPtr semiring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<IdealSet>& elements() const { return elements_; }
    const SemiringPtr& semiring() const { return semiring_; }
    const IdealSet& ideal(Elem e) const { return elements_[static_cast<std::size_t>(e)]; }
    std::optional<Elem> index_of(const IdealSet& ideal) const;

private:
    RingPtr ring_;
    std::vector<IdealSet> elements_;
    SemiringPtr semiring_;
};

using RadicalIdealSemiringPtr = std::shared_ptr<const RadicalIdealSemiring>;

/// Built once per ring and shared. Throws InternalConsistencyError if the
/// constructed tables fail a semiring axiom.
RadicalIdealSemiringPtr build_radical_semiring(const RingPtr& ring);

}  // namespace radhom
