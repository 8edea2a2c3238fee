#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Malformed input files, schema violations, broken references.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values, dimension mismatches, degenerate training sets.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stylo
