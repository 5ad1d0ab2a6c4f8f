#pragma once

#include <cstdint>

namespace cliffrand {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}
}  // namespace detail

/// Counter-based 64-bit generator (splitmix64). Streams derived from the same
/// seed but distinct ids are independent, so segments can be generated out of
/// order or in parallel and still reproduce the serial output bit for bit.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(detail::mix64(seed + detail::kGolden * (stream_id + 1))) {}

    std::uint64_t next() {
        state_ += detail::kGolden;
        ++draws_;
        return detail::mix64(state_);
    }

    /// Words consumed so far; used to observe stream laziness.
    std::uint64_t draws() const { return draws_; }

  private:
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

/// Stream id for sweep iteration ell (1-based) of the given circuit.
inline constexpr std::uint64_t stream_id_for(std::uint64_t circuit_index, std::uint64_t ell) {
    return (circuit_index << 32) | ell;
}

}  // namespace cliffrand
