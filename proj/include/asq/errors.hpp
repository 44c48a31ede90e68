#pragma once

#include <stdexcept>
#include <string>

namespace asq {

struct NotHermitianError : std::runtime_error {
    explicit NotHermitianError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParamOutOfRangeError : std::invalid_argument {
    explicit ParamOutOfRangeError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidStateError : std::invalid_argument {
    explicit InvalidStateError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidChannelError : std::invalid_argument {
    explicit InvalidChannelError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BadSpectrumError : std::invalid_argument {
    explicit BadSpectrumError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when a post-selected branch has (numerically) zero probability and
// the renormalized state is undefined.
struct ZeroProbabilityBranchError : std::runtime_error {
    explicit ZeroProbabilityBranchError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace asq
