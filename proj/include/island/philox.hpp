#pragma once
// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A trial's
// stream is addressed by (seed, trial, block), so trials can be drawn in any
// order or on any thread and still reproduce exactly.

#include <array>
#include <cstdint>

namespace island::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter philox4x32_10(Counter ctr, Key key) noexcept {
    constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += w0;
        key[1] += w1;
    }
    return ctr;
}

/// Sequential draws from the stream of one trial.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t lane = 0) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), 0u, lane} {}

    std::uint32_t next_u32() noexcept {
        if (used_ == 4) {
            buf_ = philox4x32_10(ctr_, key_);
            ++ctr_[2];
            used_ = 0;
        }
        return buf_[used_++];
    }

    /// Uniform on (0,1) with 32-bit resolution.
    double uniform32() noexcept { return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32; }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform53() noexcept {
        const std::uint64_t hi = next_u32() >> 5, lo = next_u32() >> 6;
        return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) * 0x1p-53;
    }

    bool bernoulli(double p) noexcept { return uniform32() < p; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>(uniform53() * static_cast<double>(n));
    }

private:
    Key key_;
    Counter ctr_;
    Counter buf_{};
    int used_ = 4;
};

}  // namespace island::rng
