#pragma once

#include <string>

#include "waring/binary_form.hpp"

namespace waring {

/// Parse a homogeneous polynomial in x and y from a monomial-basis
/// expression: terms joined by + and -, factors by juxtaposition or '*',
/// powers with '^', complex literals like 3, 2.5e-1, i, 3i, (1+2i).
/// Whitespace is ignored. Throws InputError when the expression is malformed
/// or not homogeneous.
BinaryForm parse_inline_form(const std::string& text);

} // namespace waring
