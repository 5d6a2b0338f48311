#include "radhom/radfunctor.hpp"

#include <algorithm>
#include <string>

#include "detail/memo.hpp"

namespace radhom {

namespace {

std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

// Lattice indices of the radical submodules; fills the carrier on first use.
const detail::ModuleMemo& ensure_carrier(const ModulePtr& m) {
    auto all = enumerate_submodules(m);  // also fills the lattice memo
    auto& memo = m->memo();
    const auto& lat = memo.lattice;
    std::call_once(memo.carrier_once, [&] {
        auto scalars = build_radical_semiring(m->ring());
        for (std::size_t i = 0; i < lat.members.size(); ++i)
            if (lat.radical[i] == static_cast<int>(i)) memo.radical_members.push_back(static_cast<int>(i));
        const int k = static_cast<int>(memo.radical_members.size());
        std::vector<int> local(lat.members.size(), -1);
        for (int i = 0; i < k; ++i) local[idx(memo.radical_members[idx(i)])] = i;
        auto rad_local = [&](const Subset& s) {
            int i = lat.index_of(s);
            if (i < 0) throw InternalConsistencyError("submodule missing from lattice");
            return local[idx(lat.radical[idx(i)])];
        };
        auto member = [&](int i) { return all[idx(memo.radical_members[idx(i)])]; };

        const auto& s = scalars->semiring();
        Table add(k, k), act(s->size(), k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) add(i, j) = rad_local(submodule_sum(member(i), member(j)).elements);
            for (Elem r = 0; r < s->size(); ++r)
                act(r, i) = rad_local(ideal_times_submodule(scalars->ideal(r), member(i)).elements);
        }
        Subset z(m->size());
        z.insert(m->zero());
        auto carrier = std::make_shared<const FiniteSemimodule>(s, std::move(add), std::move(act), rad_local(z));
        auto report = verify_semimodule_axioms(*carrier);
        if (!report.ok())
            throw InternalConsistencyError("radical semimodule fails " + report.violations.front().law + " at " +
                                           report.violations.front().witness);
        memo.carrier = std::move(carrier);
    });
    return memo;
}

}  // namespace

RadicalSemimodule::RadicalSemimodule(ModulePtr module, RadicalIdealSemiringPtr scalars,
                                     std::vector<SubmoduleSet> elements, SemimodulePtr carrier)
    : module_(std::move(module)),
      scalars_(std::move(scalars)),
      elements_(std::move(elements)),
      carrier_(std::move(carrier)) {}

std::optional<Elem> RadicalSemimodule::index_of(const SubmoduleSet& n) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), n);
    if (it == elements_.end() || !(*it == n)) return std::nullopt;
    return static_cast<Elem>(it - elements_.begin());
}

RadicalSemimodulePtr radical_semimodule(const ModulePtr& m) {
    const auto& memo = ensure_carrier(m);
    std::vector<SubmoduleSet> elems;
    elems.reserve(memo.radical_members.size());
    for (int i : memo.radical_members) elems.push_back({m, memo.lattice.members[idx(i)]});
    return std::make_shared<const RadicalSemimodule>(m, build_radical_semiring(m->ring()), std::move(elems),
                                                     memo.carrier);
}

SemimodulePtr radical_carrier(const ModulePtr& m) { return ensure_carrier(m).carrier; }

SemiHom radical_hom(const ModuleHom& f) {
    auto src = radical_semimodule(f.source());
    auto tgt = radical_semimodule(f.target());
    std::vector<Elem> map(idx(src->size()));
    for (Elem e = 0; e < src->size(); ++e) {
        auto image = radical_of_submodule(hom_apply(f, src->submodule(e)));
        auto j = tgt->index_of(image);
        if (!j) throw InternalConsistencyError("radical of an image is missing from the target carrier");
        map[idx(e)] = *j;
    }
    auto report = semi_hom_violations(*src->carrier(), *tgt->carrier(), map);
    if (!report.ok())
        throw InternalConsistencyError("R(f) violates " + report.violations.front().law + " at " +
                                       report.violations.front().witness);
    return SemiHom::trusted(src->carrier(), tgt->carrier(), std::move(map));
}

Report check_functor_laws(std::span<const std::pair<ModuleHom, ModuleHom>> pairs) {
    Report rep;
    auto check_identity = [&](const ModulePtr& m, std::size_t i) {
        auto rid = radical_hom(hom_identity(m));
        if (!(rid == semi_identity(rid.source()))) rep.add("R(id) = id", "pair " + std::to_string(i));
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [f, g] = pairs[i];
        check_identity(f.source(), i);
        check_identity(g.target(), i);
        auto lhs = radical_hom(hom_compose(g, f));
        auto rhs = semi_compose(radical_hom(g), radical_hom(f));
        for (Elem e = 0; e < lhs.source()->size(); ++e)
            if (lhs(e) != rhs(e)) {
                rep.add("R(gf) = R(g)R(f)", "pair " + std::to_string(i) + " at " + witness({e}));
                break;
            }
    }
    return rep;
}

}  // namespace radhom
