#pragma once

#include <stdexcept>
#include <string>

namespace charval {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Permutation closure passed the configured order cap.
struct ClosureExceedsCap : Error {
    explicit ClosureExceedsCap(const std::string& what) : Error(what) {}
};

/// An image list is not a bijection on {0..degree-1}.
struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& what) : Error(what) {}
};

/// A family constructor would exceed the configured order cap.
struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& what) : Error(what) {}
};

struct NotAbelian : Error {
    explicit NotAbelian(const std::string& what) : Error(what) {}
};

/// Generalized dihedral of an elementary abelian 2-group degenerates to
/// an abelian group; the construction rejects it.
struct ElementaryAbelianTwo : Error {
    explicit ElementaryAbelianTwo(const std::string& what) : Error(what) {}
};

struct NotAnInvolution : Error {
    explicit NotAnInvolution(const std::string& what) : Error(what) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error(what) {}
};

/// Conductor lift requested to a target that is not a multiple.
struct IncompatibleConductor : Error {
    explicit IncompatibleConductor(const std::string& what) : Error(what) {}
};

/// Character table computation could not find a working prime under the cap.
struct NoSuitablePrime : Error {
    explicit NoSuitablePrime(const std::string& what) : Error(what) {}
};

/// The modular lift failed post-verification. Indicates a bug; never
/// silently corrected.
struct LiftInconsistent : Error {
    explicit LiftInconsistent(const std::string& what) : Error(what) {}
};

/// Closed-form dihedral table requires an abelian group of odd order > 1.
struct EvenOrder : Error {
    explicit EvenOrder(const std::string& what) : Error(what) {}
};

/// Catalog file violates the grammar; message carries line diagnostics.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Closure of a catalog record does not match its declared order.
struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& what) : Error(what) {}
};

}  // namespace charval
