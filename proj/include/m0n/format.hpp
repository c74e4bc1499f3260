#pragma once

#include <string>

namespace m0n {

/// Shortest-form-independent rendering with 17 significant digits, so that
/// every printed double round-trips and output is byte-stable.
std::string format_number(double x);

}  // namespace m0n
