#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "radhom/errors.hpp"
#include "radhom/semiring.hpp"
#include "radhom/subset.hpp"
#include "radhom/table.hpp"

namespace radhom {

/// Commutative monoid on {0, ..., size-1} with an action of a finite
/// semiring. No additive inverses are assumed.
class FiniteSemimodule {
public:
    FiniteSemimodule(SemiringPtr scalars, Table add, Table action, Elem zero);

    const SemiringPtr& scalars() const { return scalars_; }
    int size() const { return add_.rows(); }
    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem act(Elem r, Elem m) const { return action_(r, m); }
    Elem zero() const { return zero_; }
    const Table& add_table() const { return add_; }
    const Table& action_table() const { return action_; }

    bool same_as(const FiniteSemimodule& o) const {
        return add_ == o.add_ && action_ == o.action_ && zero_ == o.zero_ && same_semiring(scalars_, o.scalars_);
    }

private:
    SemiringPtr scalars_;
    Table add_;
    Table action_;
    Elem zero_;
};

using SemimodulePtr = std::shared_ptr<const FiniteSemimodule>;

bool same_semimodule(const SemimodulePtr& a, const SemimodulePtr& b);

SemimodulePtr semiring_as_semimodule(const SemiringPtr& s);
SemimodulePtr zero_semimodule(const SemiringPtr& s);

Report verify_semimodule_axioms(const FiniteSemimodule& m);

// ---------------------------------------------------------------------------
// Subsemimodules

struct SubSemimodule {
    SemimodulePtr parent;
    Subset elements;

    std::vector<Elem> sorted() const { return elements.elements(); }
    int size() const { return elements.count(); }
    bool contains(Elem e) const { return elements.contains(e); }
    bool operator==(const SubSemimodule& o) const { return elements == o.elements; }
};

bool is_subsemimodule(const FiniteSemimodule& m, const Subset& s);

/// Throws AxiomError if the set is not closed or misses zero.
SubSemimodule make_subsemimodule(const SemimodulePtr& m, std::span<const Elem> elems);

SubSemimodule subsemimodule_generated(const SemimodulePtr& m, std::span<const Elem> gens);

SubSemimodule whole(const SemimodulePtr& m);
SubSemimodule zero_sub(const SemimodulePtr& m);

/// A subsemimodule re-indexed as a semimodule of its own.
struct Restriction {
    SemimodulePtr semimodule;
    std::vector<Elem> embed;  // local index -> parent index
    std::vector<int> local;   // parent index -> local index, or -1
};

Restriction restrict_to(const SubSemimodule& sub);

/// Subtractive: x + k in N with k in N forces x in N. Returns a witness
/// pair (x, k) when it fails.
std::optional<std::pair<Elem, Elem>> subtractive_counterexample(const SubSemimodule& n);
inline bool is_subtractive(const SubSemimodule& n) { return !subtractive_counterexample(n); }

// ---------------------------------------------------------------------------
// Homomorphisms

class SemiHom {
public:
    const SemimodulePtr& source() const { return source_; }
    const SemimodulePtr& target() const { return target_; }
    const std::vector<Elem>& map() const { return map_; }
    Elem operator()(Elem x) const { return map_[static_cast<std::size_t>(x)]; }

    bool operator==(const SemiHom& o) const { return map_ == o.map_; }

    /// Builds without validation. Only for maps that are homomorphisms by
    /// construction (composites, sums, identities).
    static SemiHom trusted(SemimodulePtr source, SemimodulePtr target, std::vector<Elem> map) {
        return SemiHom(std::move(source), std::move(target), std::move(map));
    }

private:
    SemiHom(SemimodulePtr s, SemimodulePtr t, std::vector<Elem> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    SemimodulePtr source_;
    SemimodulePtr target_;
    std::vector<Elem> map_;
};

Report semi_hom_violations(const FiniteSemimodule& source, const FiniteSemimodule& target,
                           std::span<const Elem> map);

/// Throws AxiomError naming the first violated condition.
SemiHom check_semi_hom(const SemimodulePtr& source, const SemimodulePtr& target, std::vector<Elem> map);

SemiHom semi_identity(const SemimodulePtr& m);
SemiHom semi_zero(const SemimodulePtr& source, const SemimodulePtr& target);
/// g after f.
SemiHom semi_compose(const SemiHom& g, const SemiHom& f);
/// Pointwise sum in the target.
SemiHom semi_add(const SemiHom& f, const SemiHom& g);

bool is_injective(const SemiHom& h);
bool is_surjective(const SemiHom& h);
bool is_zero_hom(const SemiHom& h);

SubSemimodule kernel(const SemiHom& h);
SubSemimodule image(const SemiHom& h);

/// h(a) = h(b) implies a + k1 = b + k2 for some k1, k2 in ker h.
/// Returns an offending pair (a, b) when it fails.
std::optional<std::pair<Elem, Elem>> steady_counterexample(const SemiHom& h);
inline bool is_steady(const SemiHom& h) { return !steady_counterexample(h); }

/// image(f) == kernel(g) as element sets. Throws ShapeError unless
/// target(f) and source(g) agree.
bool is_exact_at(const SemiHom& f, const SemiHom& g);

// ---------------------------------------------------------------------------
// Bourne quotient

struct BourneQuotient {
    SemimodulePtr parent;
    SubSemimodule sub;
    std::vector<std::vector<Elem>> classes;  // ordered by least member
    std::vector<Elem> reps;                  // least member of each class
    std::vector<int> class_of;               // parent element -> class
    SemimodulePtr quotient;

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Partition by m ~ m' iff m + n = m' + n' for some n, n' in the sub. The
/// relation's transitivity and the induced operations' independence of
/// representatives are verified; failure throws InternalConsistencyError.
BourneQuotient bourne_quotient(const SemimodulePtr& m, const SubSemimodule& n);

// ---------------------------------------------------------------------------
// Hom enumeration, free semimodules, retracts

struct SearchOptions {
    std::size_t hom_bound = 1'000'000;  // candidate assignments per enumeration
    int free_size_cap = 4096;           // largest free semimodule built
};

/// Greedy generating set: scan elements in index order, keep those not yet
/// generated.
std::vector<Elem> generating_set(const SemimodulePtr& m);

/// All homomorphisms, sorted lexicographically by map. Throws
/// SearchBoundExceeded past the bound.
std::vector<SemiHom> enumerate_homs(const SemimodulePtr& source, const SemimodulePtr& target,
                                    const SearchOptions& opts = {});

struct FreeSemimodule {
    SemimodulePtr semimodule;
    int rank = 0;
    std::vector<Elem> basis;  // characteristic vectors

    /// Coordinate a of element x (little-endian base |S| digits).
    Elem coordinate(Elem x, int a) const;
};

/// S^rank with componentwise operations. Throws ShapeError past the cap.
FreeSemimodule free_semimodule(const SemiringPtr& s, int rank, int size_cap = 4096);

/// The unique hom sending basis element a to assignment[a].
SemiHom hom_from_basis(const FreeSemimodule& free, const SemimodulePtr& target, std::span<const Elem> assignment);

struct RetractWitness {
    FreeSemimodule free;
    SemiHom surjection;  // free -> m
    SemiHom injection;   // m -> free
};

struct RetractSearch {
    enum class Outcome { found, none_at_size, bound_exceeded };
    struct Attempt {
        int basis_size;
        Outcome outcome;
    };
    std::optional<RetractWitness> witness;
    std::vector<Attempt> attempts;

    bool found() const { return witness.has_value(); }
    bool any_bound_exceeded() const;
};

/// Searches basis sizes 1..max_basis for surjective phi: S^A -> m and
/// injective psi: m -> S^A with phi psi = id.
RetractSearch is_retract_of_free(const SemimodulePtr& m, int max_basis, const SearchOptions& opts = {});

std::optional<SemiHom> find_isomorphism(const SemimodulePtr& a, const SemimodulePtr& b,
                                        const SearchOptions& opts = {});

}  // namespace radhom
