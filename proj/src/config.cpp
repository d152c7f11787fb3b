#include "pivd/config.hpp"

#include <cstdlib>

namespace pivd {

int default_order_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("PIVD_ORDER_CAP")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 10;
  }();
  return cap;
}

}  // namespace pivd
