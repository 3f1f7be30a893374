#include "ksym/ksymplectic.hpp"

namespace ksym {

unsigned long long dimension_bound(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  return 1ULL << ((k - 1) / 2);
}

}  // namespace ksym
