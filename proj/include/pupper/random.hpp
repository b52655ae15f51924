#ifndef PUPPER_RANDOM_HPP
#define PUPPER_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace pupper {

// Deterministic generator: the 64-bit Mersenne Twister, whose output
// sequence is fixed by the C++ standard.  The standard distributions are
// not portable, so bits and bounded integers are derived here directly.
class Rng {
public:
  explicit Rng (std::uint64_t seed) : engine_ (seed) {}

  std::uint64_t next () { return engine_ (); }
  // Most significant bit of the next output.
  bool bit () { return (engine_ () >> 63) != 0; }
  // Uniform in [0, bound), bound > 0 (Lemire's multiply-and-reject).
  std::uint64_t below (std::uint64_t bound);

  template <class T> void shuffle (std::span<T> items) {
    for (std::size_t i = items.size (); i > 1; i--)
      std::swap (items[i - 1], items[below (i)]);
  }

  friend bool operator== (const Rng &, const Rng &) = default;

private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64 (std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of copy 'index' for a run seeded with 'seed':
//   mix64 (seed + (index + 1) * 0x9e3779b97f4a7c15)
// i.e. the (index + 1)-th output of a SplitMix64 stream started at 'seed'.
constexpr std::uint64_t derive_seed (std::uint64_t seed, std::uint64_t index) {
  return mix64 (seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// 64-bit FNV-1a, used to derive per-file seeds from names.
constexpr std::uint64_t fnv1a (std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char> (c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace pupper

#endif
