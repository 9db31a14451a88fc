#pragma once

#include <cstdint>

namespace eprsim {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

/// Derive an independent sub-seed from a seed and a tag (e.g. the bit
/// pattern of an angle), so distinct evaluation points get distinct,
/// reproducible streams.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return detail::mix64(seed + detail::mix64(tag + detail::kGolden));
}

/// Counter-based generator: the SplitMix64 output function applied to a
/// Weyl sequence. uniform(stream, i) is a pure function of
/// (seed, stream, i), so samples may be evaluated in any order — or in
/// parallel — and still reproduce bit-identically.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed)
      : seed_(detail::mix64(seed ^ detail::kGolden)) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
    const std::uint64_t s = detail::mix64(seed_ + detail::mix64(stream + 1));
    return detail::mix64(s + counter * detail::kGolden);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t stream, std::uint64_t counter) const {
    return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
};

}  // namespace eprsim
