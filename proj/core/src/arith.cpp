#include "gog/arith.hpp"

#include <numeric>

#include "gog/error.hpp"

namespace gog {

Order checked_lcm(Order a, Order b) {
  if (a == 0 || b == 0) return 0;
  Order q = a / std::gcd(a, b);
  Order out = 0;
  if (__builtin_mul_overflow(q, b, &out)) {
    throw Error(ErrorCode::OrderOverflow,
                "lcm of " + std::to_string(a) + " and " + std::to_string(b) +
                    " exceeds 64 bits");
  }
  return out;
}

}  // namespace gog
