#include "pupper/random.hpp"

namespace pupper {

std::uint64_t Rng::below (std::uint64_t bound) {
  unsigned __int128 product = (unsigned __int128) next () * bound;
  std::uint64_t low = static_cast<std::uint64_t> (product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = (unsigned __int128) next () * bound;
      low = static_cast<std::uint64_t> (product);
    }
  }
  return static_cast<std::uint64_t> (product >> 64);
}

} // namespace pupper
