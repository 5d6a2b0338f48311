#pragma once

#include <memory>
#include <span>
#include <vector>

#include "radhom/errors.hpp"
#include "radhom/finring.hpp"
#include "radhom/subset.hpp"
#include "radhom/table.hpp"

namespace radhom {

namespace detail {
struct ModuleMemo;
}

/// Finite module over a FiniteRing, elements {0, ..., size-1}. The action
/// table is indexed (ring element, module element).
class FiniteModule {
public:
    const RingPtr& ring() const { return ring_; }
    int size() const { return add_.rows(); }
    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem act(Elem r, Elem m) const { return action_(r, m); }
    Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
    Elem zero() const { return zero_; }
    const Table& add_table() const { return add_; }
    const Table& action_table() const { return action_; }

    bool same_as(const FiniteModule& o) const {
        return add_ == o.add_ && action_ == o.action_ && zero_ == o.zero_ && same_ring(ring_, o.ring_);
    }

    detail::ModuleMemo& memo() const { return *memo_; }

private:
    friend std::shared_ptr<const FiniteModule> make_module(RingPtr, Table, Table, Elem);
    FiniteModule(RingPtr ring, Table add, Table action, Elem zero, std::vector<Elem> neg);

    RingPtr ring_;
    Table add_;
    Table action_;
    Elem zero_;
    std::vector<Elem> neg_;
    std::shared_ptr<detail::ModuleMemo> memo_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

bool same_module(const ModulePtr& a, const ModulePtr& b);

/// Validates every module axiom; throws AxiomError naming the first violation.
ModulePtr make_module(RingPtr ring, Table add, Table action, Elem zero);

ModulePtr ring_as_module(const RingPtr& ring);
ModulePtr zero_module(const RingPtr& ring);
/// R^k; the tuple (c_0, ..., c_{k-1}) has index sum c_i |R|^i.
ModulePtr free_module(const RingPtr& ring, int k);
/// The pair (x, y) has index x * |b| + y.
ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

struct SubmoduleSet {
    ModulePtr module;
    Subset elements;

    std::vector<Elem> sorted() const { return elements.elements(); }
    int size() const { return elements.count(); }
    bool contains(Elem e) const { return elements.contains(e); }
    bool is_whole() const { return elements.count() == module->size(); }

    bool operator==(const SubmoduleSet& o) const { return elements == o.elements; }
    std::strong_ordering operator<=>(const SubmoduleSet& o) const { return elements <=> o.elements; }
};

/// Throws AxiomError unless the set is a submodule.
SubmoduleSet make_submodule(const ModulePtr& m, std::span<const Elem> elems);
SubmoduleSet submodule_generated(const ModulePtr& m, std::span<const Elem> gens);
SubmoduleSet submodule_sum(const SubmoduleSet& a, const SubmoduleSet& b);
/// IN, generated by the products i*n.
SubmoduleSet ideal_times_submodule(const IdealSet& ideal, const SubmoduleSet& n);
bool is_submodule(const FiniteModule& m, const Subset& s);

/// All submodules in canonical order.
std::vector<SubmoduleSet> enumerate_submodules(const ModulePtr& m);

/// N proper, and r*m in N forces m in N or r*M inside N.
bool is_prime_submodule(const SubmoduleSet& n);

/// Intersection of the prime submodules containing N; M if there are none.
SubmoduleSet radical_of_submodule(const SubmoduleSet& n);

/// rad({0}) = {0}.
bool is_radical_module(const ModulePtr& m);

/// Canonical submodule list as raw subsets, for persistence.
std::vector<Subset> submodule_lattice(const ModulePtr& m);
/// Installs a previously computed canonical list. Has no effect once the
/// lattice has been computed. The list is checked for closure and order.
void seed_submodule_lattice(const ModulePtr& m, std::vector<Subset> members);

// ---------------------------------------------------------------------------
// Homomorphisms

class ModuleHom {
public:
    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    const std::vector<Elem>& map() const { return map_; }
    Elem operator()(Elem x) const { return map_[static_cast<std::size_t>(x)]; }

    bool operator==(const ModuleHom& o) const { return map_ == o.map_; }

    /// Builds without validation; for maps that are homs by construction.
    static ModuleHom trusted(ModulePtr source, ModulePtr target, std::vector<Elem> map) {
        return ModuleHom(std::move(source), std::move(target), std::move(map));
    }

private:
    ModuleHom(ModulePtr s, ModulePtr t, std::vector<Elem> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    ModulePtr source_;
    ModulePtr target_;
    std::vector<Elem> map_;
};

Report module_hom_violations(const FiniteModule& source, const FiniteModule& target, std::span<const Elem> map);

/// Throws AxiomError naming the first violated linearity condition, or
/// ShapeError on mismatched rings or sizes.
ModuleHom check_module_hom(const ModulePtr& source, const ModulePtr& target, std::vector<Elem> map);

ModuleHom hom_identity(const ModulePtr& m);
ModuleHom hom_zero(const ModulePtr& source, const ModulePtr& target);
/// g after f. Throws ShapeError unless composable.
ModuleHom hom_compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_negate(const ModuleHom& f);
/// x -> r*f(x).
ModuleHom hom_scale(Elem r, const ModuleHom& f);
bool is_zero_hom(const ModuleHom& f);

SubmoduleSet hom_image(const ModuleHom& f);
SubmoduleSet hom_kernel(const ModuleHom& f);
/// f(N).
SubmoduleSet hom_apply(const ModuleHom& f, const SubmoduleSet& n);

struct QuotientModule {
    ModulePtr module;
    ModuleHom projection;
    std::vector<Elem> reps;  // least element of each coset
};

/// M/N with cosets ordered by their least element.
QuotientModule quotient_module(const SubmoduleSet& n);

struct SubmoduleAsModule {
    ModulePtr module;
    ModuleHom inclusion;
};

SubmoduleAsModule submodule_as_module(const SubmoduleSet& n);

/// Every hom M -> M' (brute force, for small instances). Throws
/// SearchBoundExceeded past `bound` candidate assignments.
std::vector<ModuleHom> enumerate_module_homs(const ModulePtr& source, const ModulePtr& target,
                                             std::size_t bound = 1'000'000);

}  // namespace radhom
