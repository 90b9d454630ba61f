#pragma once

// Named example orders.
//
//   zc<k>, zc<a>xc<b>...   group rings of finite abelian groups
//   zsqrt<d>, zsqrtm<d>    Z[sqrt(d)], Z[sqrt(-d)]; zi is Z[sqrt(-1)]
//   zgolden                Z[(1+sqrt 5)/2]
//   zeta5                  Z[C5]/(sum of the group elements)
//   parity5                vectors of Z^5 whose coordinates share a parity
//   zeta3cbrt2             Z[zeta_3] (x) Z[cbrt 2], rank 6
//   zeps                   Z[X]/(X^2), not reduced
//   z, zxz                 Z and Z x Z

#include <string>
#include <string_view>
#include <vector>

#include "gradus/order.hpp"

namespace gradus {

// Throws InvalidArgument for unknown names.
Order example_order(std::string_view name);

// The fixed names (patterns are listed by representative).
std::vector<std::string> example_names();

}  // namespace gradus
