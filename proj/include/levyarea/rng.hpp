#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace levyarea {

/// Philox4x32-10 counter-based generator.
///
/// The 64-bit key selects the master seed and the upper half of the counter
/// selects the stream, so stream(seed, i) is reproducible independently of
/// how replications are scheduled across threads. Satisfies
/// UniformRandomBitGenerator with 64-bit outputs.
class Philox4x32 {
public:
    using result_type = std::uint64_t;
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        if (index_ == 2) {
            refill();
        }
        const std::uint64_t lo = buffer_[2 * index_];
        const std::uint64_t hi = buffer_[2 * index_ + 1];
        ++index_;
        return (hi << 32) | lo;
    }

    /// Uniform double in the open interval (0, 1).
    double uniform() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// The raw bijection: ten rounds on `counter` under `key`.
    static Block encrypt(Block counter, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * counter[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * counter[2];
            counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0], static_cast<std::uint32_t>(p1),
                       static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return counter;
    }

private:
    void refill() noexcept {
        const Block counter{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        buffer_ = encrypt(counter, key_);
        ++block_;
        index_ = 0;
    }

    Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Block buffer_{};
    int index_ = 2;
};

} // namespace levyarea
