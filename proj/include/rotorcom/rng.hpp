#pragma once

#include <cstdint>

namespace rotorcom {

// splitmix64: used both as a seed scrambler and to derive independent
// per-trajectory streams from (base_seed, index).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t s = base;
  std::uint64_t a = splitmix64_next(s);
  s = a + index;
  return splitmix64_next(s);
}

// xoshiro256++ with a Box-Muller Gaussian layer.  Self-contained so that
// identical seeds give identical streams on any platform / standard library.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed);

  double uniform();  // [0, 1)
  double gaussian();

 private:
  std::uint64_t next_u64();
  std::uint64_t s_[4];
  double cached_ = 0;
  bool has_cached_ = false;
};

}  // namespace rotorcom
