#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pcount {

// Exact partition counts. p(164) already exceeds 32-bit range and the CLI
// handles n in the thousands, so counts never touch fixed-width integers
// or floating point.
using Count = boost::multiprecision::cpp_int;

}  // namespace pcount
