#pragma once

// Lazily computed, immutable-once-built data attached to rings and modules.
// Holds no owning pointer back to the ring or module, so no ownership cycles.

#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "radhom/semicore.hpp"
#include "radhom/semiring.hpp"
#include "radhom/subset.hpp"

namespace radhom::detail {

struct LatticeMemo {
    std::once_flag once;
    std::vector<Subset> members;  // canonical order
    std::unordered_map<Subset, int, SubsetHash> index;
    std::vector<char> prime;
    std::vector<int> radical;  // member index -> index of its radical

    int index_of(const Subset& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }
};

/// Fills the lattice on first use. `members` computes the canonical member
/// list (or returns a preloaded one); `is_prime` classifies a member.
void ensure_lattice(LatticeMemo& memo, const std::function<std::vector<Subset>()>& members,
                    const std::function<bool(const Subset&)>& is_prime, const Subset& whole);

struct RingMemo {
    LatticeMemo lattice;
    std::once_flag semiring_once;
    std::vector<int> radical_members;  // lattice indices of radical ideals, canonical order
    SemiringPtr semiring;
};

struct ModuleMemo {
    LatticeMemo lattice;
    std::once_flag carrier_once;
    std::vector<int> radical_members;
    SemimodulePtr carrier;
};

}  // namespace radhom::detail
