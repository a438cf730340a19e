#pragma once

#include <cstdint>
#include <string_view>

namespace hopdom {

/// SplitMix64 (Steele, Lea, Flood 2014), version 1 of the generator used by
/// all graph families. The constants below are part of the file format:
/// changing them changes every generated graph.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix(z);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a over the bytes of `text`.
constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Per-instance seed: mix(mix(mix(master) ^ fnv1a64(family)) ^ index).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view family,
                                 std::uint64_t index) {
  std::uint64_t h = SplitMix64::mix(master);
  h = SplitMix64::mix(h ^ fnv1a64(family));
  return SplitMix64::mix(h ^ index);
}

}  // namespace hopdom
