#include "gbl/util.hpp"

#include <cstdio>

namespace gbl {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace gbl
