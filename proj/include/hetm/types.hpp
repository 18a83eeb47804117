#ifndef HETM_TYPES_HPP
#define HETM_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hetm {

using Word = std::uint64_t;
using WordIdx = std::uint64_t;
using Timestamp = std::uint64_t;

inline constexpr std::size_t kWordBytes = sizeof(Word);

/// The two transactional devices of the platform.
enum class Device : std::uint8_t { Host = 0, Dev = 1 };

/// Buffers addressable by raw (non-transactional) region operations.
enum class Replica : std::uint8_t { Host = 0, Dev = 1, DevShadow = 2, HostSnapshot = 3 };

inline const char* toString(Device d) { return d == Device::Host ? "host" : "dev"; }

inline const char* toString(Replica r) {
    switch (r) {
        case Replica::Host: return "host";
        case Replica::Dev: return "dev";
        case Replica::DevShadow: return "dev-shadow";
        case Replica::HostSnapshot: return "host-snapshot";
    }
    return "?";
}

struct HetmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSizeError : HetmError { using HetmError::HetmError; };
struct OutOfBoundsError : HetmError { using HetmError::HetmError; };
struct RoundClosedError : HetmError { using HetmError::HetmError; };
struct KernelNotRegisteredError : HetmError { using HetmError::HetmError; };
struct LivelockError : HetmError { using HetmError::HetmError; };
struct NoImplementationError : HetmError { using HetmError::HetmError; };
struct BadAffinityError : HetmError { using HetmError::HetmError; };
struct IncompleteTraceError : HetmError { using HetmError::HetmError; };
struct NondeterministicInputError : HetmError { using HetmError::HetmError; };
struct ConfigError : HetmError { using HetmError::HetmError; };
struct IoError : HetmError { using HetmError::HetmError; };

/// Thrown by the guest TMs when a transaction must be rolled back and retried.
/// Deliberately not derived from std::exception so that transaction bodies
/// cannot swallow it with a catch-all handler.
struct TxAbort {};

}  // namespace hetm

#endif
