#pragma once

// Closure and enumeration over an abelian group with a scalar action given by
// tables. Ideals of a ring are the submodules of the ring acting on itself, so
// finring and finmodule share this machinery.

#include <span>
#include <vector>

#include "radhom/subset.hpp"
#include "radhom/table.hpp"

namespace radhom::detail {

struct ActionTables {
    const Table& add;
    const Table& action;  // scalars x elements
    Elem zero;

    int size() const { return add.rows(); }
    int scalars() const { return action.rows(); }
};

/// Subgroup S + <g_1> + ... + <g_k>. `s` must already be a subgroup.
Subset additive_closure(const ActionTables& t, Subset s, std::span<const Elem> gens);

/// Smallest subset containing gens and zero closed under add and the action.
Subset generated(const ActionTables& t, std::span<const Elem> gens);

/// a + b for two sub-objects.
Subset sum(const ActionTables& t, const Subset& a, const Subset& b);

/// All sub-objects in canonical order, by saturating cyclic ones under sums.
std::vector<Subset> enumerate(const ActionTables& t);

bool is_closed(const ActionTables& t, const Subset& s);

/// Throws ShapeError unless `members` is strictly increasing, made of closed
/// subsets of the right universe, starts at {zero} and contains the whole.
void check_seed(const ActionTables& t, const std::vector<Subset>& members);

}  // namespace radhom::detail
