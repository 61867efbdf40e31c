#ifndef COREIDEAL_RANDOM_HPP
#define COREIDEAL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace coreideal {

/// splitmix64 finalizer; used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic sub-seed for stream `tag`, index `i` under `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                    std::uint64_t i) {
  return mix64(mix64(seed ^ mix64(tag)) + i);
}

/// Seeded generator. mt19937_64's output sequence is fixed by the standard;
/// bounded draws use rejection sampling so results do not depend on the
/// standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t bounded(std::uint64_t bound) {
    // 2^64 mod bound; draws below it would bias the residue.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x < threshold);
    return x % bound;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace coreideal

#endif  // COREIDEAL_RANDOM_HPP
