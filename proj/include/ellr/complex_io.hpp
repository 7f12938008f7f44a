#pragma once

#include <string>
#include <string_view>

#include "ellr/theta.hpp"

namespace ellr {

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i", with optional exponents ("1e-3-2.5e-1i").
cplx parse_complex(std::string_view s);
// Shortest round-trip form, "a+bi".
std::string format_complex(cplx z);
std::string format_double(double x);

}  // namespace ellr
