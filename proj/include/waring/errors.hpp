#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/// Bad caller input: malformed expressions, degree mismatches, zero forms,
/// out-of-range indices. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The computation could not certify an answer at the requested tolerances
/// (SVD failure, indeterminate root separation, ill-conditioned solve,
/// exhausted kernel search). Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace waring
