#pragma once
#include <cstddef>
#include <cstdint>

namespace rsg {

// pcg32 (oneseq variant).  A generator is always passed explicitly so that a
// verification run is reproducible from its seed alone.
class Pcg32 {
public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t seq = 0xda3e39cb94b95bdbULL)
      : state_(0), inc_((seq << 1u) | 1u) {
    next();
    state_ += seed;
    next();
  }

  std::uint32_t next() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // n must be positive
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1u) != 0; }

private:
  std::uint64_t state_, inc_;
};

} // namespace rsg
