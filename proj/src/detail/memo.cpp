#include "detail/memo.hpp"

#include "radhom/errors.hpp"

namespace radhom::detail {

void ensure_lattice(LatticeMemo& memo, const std::function<std::vector<Subset>()>& members,
                    const std::function<bool(const Subset&)>& is_prime, const Subset& whole) {
    std::call_once(memo.once, [&] {
        memo.members = members();
        for (std::size_t i = 0; i < memo.members.size(); ++i)
            memo.index.emplace(memo.members[i], static_cast<int>(i));
        memo.prime.reserve(memo.members.size());
        std::vector<std::size_t> primes;
        for (std::size_t i = 0; i < memo.members.size(); ++i) {
            bool p = is_prime(memo.members[i]);
            memo.prime.push_back(p ? 1 : 0);
            if (p) primes.push_back(i);
        }
        memo.radical.reserve(memo.members.size());
        for (const auto& m : memo.members) {
            Subset rad = whole;
            for (auto p : primes)
                if (m.is_subset_of(memo.members[p])) rad &= memo.members[p];
            int idx = memo.index_of(rad);
            if (idx < 0) throw InternalConsistencyError("radical is missing from the sub-object lattice");
            memo.radical.push_back(idx);
        }
    });
}

}  // namespace radhom::detail
