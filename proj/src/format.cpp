#include "m0n/format.hpp"

#include <cmath>
#include <cstdio>

namespace m0n {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  if (!std::isfinite(x)) return std::isnan(x) ? "NaN" : (x > 0 ? "Infinity" : "-Infinity");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace m0n
