#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace anick {

// Exact rationals, always canonical.
using Scalar = mpq_class;

std::string to_string(const Scalar& q);

// Accepts "7", "-3", "2/4" (canonicalized). Throws InputError otherwise.
Scalar parse_scalar(std::string_view text);

}  // namespace anick
