#include "sqw/rng.hpp"

#include "sqw/errors.hpp"

namespace sqw {

std::uint64_t WalkRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("bound must be positive");
  // rejection keeps the draw unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

}  // namespace sqw
