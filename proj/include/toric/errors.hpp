#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange final : Error { using Error::Error; };
struct DuplicateEdge final : Error { using Error::Error; };
struct EmptyEdge final : Error { using Error::Error; };

struct NotBalanced final : Error { using Error::Error; };
struct NotUniform final : Error { using Error::Error; };
struct HostMismatch final : Error { using Error::Error; };
struct NotInKernel final : Error { using Error::Error; };
struct ZeroVector final : Error { using Error::Error; };
struct BoundRequired final : Error { using Error::Error; };

struct NotMatchingPair final : Error { using Error::Error; };
struct InvalidDecomposition final : Error { using Error::Error; };
struct CertificateMismatch final : Error { using Error::Error; };
struct NotMonomial final : Error { using Error::Error; };

// Integer arithmetic never wraps silently; it fails hard instead.
struct OverflowError final : Error { using Error::Error; };

// Work cap hit. The message reports how far the computation got; partial
// results are never returned as if they were complete.
struct ResourceLimit final : Error { using Error::Error; };

struct ParseError final : Error { using Error::Error; };

} // namespace toric
