#include "detail/lattice.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "radhom/errors.hpp"

namespace radhom::detail {

Subset additive_closure(const ActionTables& t, Subset s, std::span<const Elem> gens) {
    for (Elem g : gens) {
        if (s.contains(g)) continue;
        // S + <g> is the union of the cosets S + k*g.
        auto base = s.elements();
        Subset out = s;
        Elem x = g;
        while (!s.contains(x)) {
            for (Elem b : base) out.insert(t.add(b, x));
            x = t.add(x, g);
        }
        s = std::move(out);
    }
    return s;
}

Subset generated(const ActionTables& t, std::span<const Elem> gens) {
    std::vector<Elem> orbit;
    Subset seen(t.size());
    for (Elem g : gens)
        for (int r = 0; r < t.scalars(); ++r) {
            Elem x = t.action(r, g);
            if (!seen.contains(x)) {
                seen.insert(x);
                orbit.push_back(x);
            }
        }
    Subset s(t.size());
    s.insert(t.zero);
    return additive_closure(t, std::move(s), orbit);
}

Subset sum(const ActionTables& t, const Subset& a, const Subset& b) {
    if (b.is_subset_of(a)) return a;
    if (a.is_subset_of(b)) return b;
    Subset out(t.size());
    auto ea = a.elements();
    b.for_each([&](Elem y) {
        for (Elem x : ea) out.insert(t.add(x, y));
    });
    return out;
}

std::vector<Subset> enumerate(const ActionTables& t) {
    const int n = t.size();
    std::vector<Subset> cyclic;
    cyclic.reserve(static_cast<std::size_t>(n));
    for (Elem m = 0; m < n; ++m) {
        Elem one[] = {m};
        cyclic.push_back(generated(t, one));
    }

    std::unordered_set<Subset, SubsetHash> found;
    std::vector<Subset> work;
    for (const auto& c : cyclic)
        if (found.insert(c).second) work.push_back(c);

    // Every sub-object is a finite sum of cyclic ones, so closing under
    // "add one more cyclic summand" reaches all of them.
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (Elem m = 0; m < n; ++m) {
            if (work[i].contains(m)) continue;
            Subset s = sum(t, work[i], cyclic[static_cast<std::size_t>(m)]);
            if (found.insert(s).second) work.push_back(std::move(s));
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

bool is_closed(const ActionTables& t, const Subset& s) {
    if (!s.contains(t.zero)) return false;
    auto e = s.elements();
    for (Elem x : e) {
        for (int r = 0; r < t.scalars(); ++r)
            if (!s.contains(t.action(r, x))) return false;
        for (Elem y : e)
            if (!s.contains(t.add(x, y))) return false;
    }
    return true;
}

void check_seed(const ActionTables& t, const std::vector<Subset>& members) {
    if (members.empty()) throw ShapeError("seeded lattice is empty");
    Subset zero(t.size());
    zero.insert(t.zero);
    const auto whole = Subset::full(t.size());
    if (!(members.front() == zero) || std::find(members.begin(), members.end(), whole) == members.end())
        throw ShapeError("seeded lattice must start at the zero sub-object and contain the whole");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].universe() != t.size() || !is_closed(t, members[i]))
            throw ShapeError("seeded lattice member " + std::to_string(i) + " is not closed");
        if (i > 0 && !(members[i - 1] < members[i]))
            throw ShapeError("seeded lattice is not in canonical order at " + std::to_string(i));
    }
}

}  // namespace radhom::detail
