#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radhom/errors.hpp"
#include "radhom/finmodule.hpp"
#include "radhom/finring.hpp"
#include "radhom/semicore.hpp"

namespace radhom {

/// R(M): the radical submodules of M as a semimodule over R(R), with
/// N + L := rad(N + L) and I . N := rad(IN).
class RadicalSemimodule {
public:
    RadicalSemimodule(ModulePtr module, RadicalIdealSemiringPtr scalars, std::vector<SubmoduleSet> elements,
                      SemimodulePtr carrier);

    const ModulePtr& module() const { return module_; }
    const RadicalIdealSemiringPtr& scalars() const { return scalars_; }
    const SemimodulePtr& carrier() const { return carrier_; }
    const std::vector<SubmoduleSet>& elements() const { return elements_; }
    const SubmoduleSet& submodule(Elem e) const { return elements_[static_cast<std::size_t>(e)]; }
    int size() const { return static_cast<int>(elements_.size()); }
    std::optional<Elem> index_of(const SubmoduleSet& n) const;

private:
    ModulePtr module_;
    RadicalIdealSemiringPtr scalars_;
    std::vector<SubmoduleSet> elements_;
    SemimodulePtr carrier_;
};

using RadicalSemimodulePtr = std::shared_ptr<const RadicalSemimodule>;

/// Built once per module; the carrier is shared between calls. Throws
/// InternalConsistencyError if the tables fail a semimodule axiom.
RadicalSemimodulePtr radical_semimodule(const ModulePtr& m);

/// The shared carrier of R(M).
SemimodulePtr radical_carrier(const ModulePtr& m);

/// R(f): N -> rad(f(N)).
SemiHom radical_hom(const ModuleHom& f);

/// R(id) = id for each source and target, and R(g f) = R(g) R(f) for each
/// pair (f, g).
Report check_functor_laws(std::span<const std::pair<ModuleHom, ModuleHom>> pairs);

}  // namespace radhom
