#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace radhom {

/// Input tables or maps that violate a named algebraic axiom.
class AxiomError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input: wrong shapes, out-of-range indices, mismatched endpoints.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checked precondition of an operation does not hold for the given input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction that must succeed by the algebra did not. Indicates a bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A search ran past its configured candidate bound before finishing.
class SearchBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One failed law or property, with a witness rendered as text.
struct Violation {
    std::string law;
    std::string witness;
};

/// List of failures; empty means every check passed.
struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string law, std::string witness) {
        violations.push_back({std::move(law), std::move(witness)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& v : other.violations)
            violations.push_back({prefix.empty() ? v.law : prefix + ": " + v.law, v.witness});
    }
};

}  // namespace radhom
