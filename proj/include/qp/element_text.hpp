#pragma once

#include <string>
#include <string_view>

#include "qp/ring.hpp"

namespace qp {

/// Parses `INT`, `INT+INTs`, `INT-INT*s`, `s`, `-3s` or `(INT+INTs)/2`.
/// Whitespace is ignored, `s` stands for sqrt(d) and `i` is accepted when d == -1.
/// Throws std::invalid_argument on malformed text or invalid coordinates.
QuadInt parse_element(Ring ring, std::string_view text);

/// Inverse of parse_element: `(1+s)/2`, `2-s`, `-s`, `28`.
std::string format_element(QuadInt const& z);

}  // namespace qp
