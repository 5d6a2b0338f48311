#pragma once

#include <memory>

#include "radhom/errors.hpp"
#include "radhom/table.hpp"

namespace radhom {

/// Commutative semiring on {0, ..., size-1} given by operation tables.
///
/// Construction checks shapes only; the algebraic laws are checked by
/// verify_semiring_axioms so that broken tables can be inspected.
class FiniteSemiring {
public:
    FiniteSemiring(Table add, Table mul, Elem zero, Elem one);

    int size() const { return add_.rows(); }
    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem mul(Elem a, Elem b) const { return mul_(a, b); }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const Table& add_table() const { return add_; }
    const Table& mul_table() const { return mul_; }

    bool operator==(const FiniteSemiring&) const = default;

private:
    Table add_;
    Table mul_;
    Elem zero_;
    Elem one_;
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

Report verify_semiring_axioms(const FiniteSemiring& s);

/// Pointer-equal or table-equal.
bool same_semiring(const SemiringPtr& a, const SemiringPtr& b);

/// {0, 1} with or/and.
SemiringPtr boolean_semiring();

}  // namespace radhom
