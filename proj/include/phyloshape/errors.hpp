#pragma once

#include <stdexcept>
#include <string>

namespace phyloshape {

// Error taxonomy mirrored by the CLI exit codes:
//   IoError -> 1, NumericError -> 2, ContractError -> 3.

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phyloshape
