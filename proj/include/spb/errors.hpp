#pragma once

#include <stdexcept>
#include <string>

namespace spb {

/// Base class for all library errors. Everything thrown on purpose derives
/// from this, so callers (and the CLI) can map failures to one exit path.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or search would exceed the configured work budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// contract_edge was asked to contract an edge that is not in the graph.
struct EdgeNotFound : Error {
    explicit EdgeNotFound(const std::string& what) : Error(what) {}
};

/// An operation was applied to an instance of the wrong category
/// (e.g. star-only operations on a multi-block instance).
struct WrongCategory : Error {
    explicit WrongCategory(const std::string& what) : Error(what) {}
};

/// A split rule's structural precondition does not hold.
struct WrongShape : Error {
    explicit WrongShape(const std::string& what) : Error(what) {}
};

/// The operation is only defined for omega = 1.
struct UnsupportedOmega : Error {
    explicit UnsupportedOmega(const std::string& what) : Error(what) {}
};

/// decide() has no complete procedure for this instance shape at this omega.
struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& what) : Error(what) {}
};

/// Certificate is structurally broken (bad rotation domain, missing or
/// duplicate assignment entries, non-planar rotation).
struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& what) : Error(what) {}
};

/// Certificate references a face id outside the canonical face range.
struct FaceIdOutOfRange : Error {
    explicit FaceIdOutOfRange(const std::string& what) : Error(what) {}
};

/// A generator input violates its shape precondition (wrong k, non-tree
/// common graph, non-matching exclusive edges, ...).
struct ShapeViolation : Error {
    explicit ShapeViolation(const std::string& what) : Error(what) {}
};

/// classify() requires the union graph to be connected.
struct DisconnectedUnion : Error {
    explicit DisconnectedUnion(const std::string& what) : Error(what) {}
};

/// JSON or file level problem.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace spb
