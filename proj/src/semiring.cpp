#include "radhom/semiring.hpp"

namespace radhom {

FiniteSemiring::FiniteSemiring(Table add, Table mul, Elem zero, Elem one)
    : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    int n = add_.rows();
    if (n < 1) throw ShapeError("semiring must have at least one element");
    if (add_.cols() != n || mul_.rows() != n || mul_.cols() != n)
        throw ShapeError("semiring tables must be square and of equal size");
    add_.require_entries_below(n, "add");
    mul_.require_entries_below(n, "mul");
    if (zero < 0 || zero >= n || one < 0 || one >= n) throw ShapeError("zero/one out of range");
}

Report verify_semiring_axioms(const FiniteSemiring& s) {
    Report r;
    const int n = s.size();
    auto first = [&r](const std::string& law, std::string w) {
        for (const auto& v : r.violations)
            if (v.law == law) return;
        r.add(law, std::move(w));
    };
    for (Elem a = 0; a < n; ++a) {
        if (s.add(a, s.zero()) != a) first("add identity", witness({a}));
        if (s.mul(a, s.one()) != a) first("mul identity", witness({a}));
        if (s.mul(a, s.zero()) != s.zero()) first("zero absorbs", witness({a}));
        for (Elem b = 0; b < n; ++b) {
            if (s.add(a, b) != s.add(b, a)) first("add commutative", witness({a, b}));
            if (s.mul(a, b) != s.mul(b, a)) first("mul commutative", witness({a, b}));
            for (Elem c = 0; c < n; ++c) {
                if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) first("add associative", witness({a, b, c}));
                if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) first("mul associative", witness({a, b, c}));
                if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
                    first("distributive", witness({a, b, c}));
            }
        }
    }
    return r;
}

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
    return a == b || (a && b && *a == *b);
}

SemiringPtr boolean_semiring() {
    static const SemiringPtr b = [] {
        Table add(2, 2), mul(2, 2);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                add(x, y) = x | y;
                mul(x, y) = x & y;
            }
        return std::make_shared<const FiniteSemiring>(add, mul, 0, 1);
    }();
    return b;
}

}  // namespace radhom
