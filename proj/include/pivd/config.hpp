#ifndef PIVD_CONFIG_HPP
#define PIVD_CONFIG_HPP

namespace pivd {

// Default order cap for canonical labeling and witness searches.
// Overridable through the PIVD_ORDER_CAP environment variable.
int default_order_cap();

}  // namespace pivd

#endif
