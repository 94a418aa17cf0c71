#ifndef SWARMTOPO_RNG_HPP
#define SWARMTOPO_RNG_HPP

#include <cstdint>

namespace swarmtopo {

/// PCG64 (XSL-RR 128/64, "setseq" stream variant).
///
/// Chosen over std::mt19937_64 because run-level parallelism needs
/// arbitrary-offset jump-ahead: advance(n) is O(log n), so a batch of
/// runs sharing one logical stream can be started from pre-computed
/// boundary states and still produce the exact sequential result.
/// Output matches the reference pcg64 / numpy.random.PCG64 bit for bit.
class Pcg64 {
public:
    using result_type = std::uint64_t;

    Pcg64() : Pcg64(0xcafef00dd15ea5e5ULL, 0xa02bdbf7bb3c0a7ULL) {}

    explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0xa02bdbf7bb3c0a7ULL)
    {
        inc_ = ((static_cast<u128>(stream) << 1) | 1u);
        state_ = 0;
        step();
        state_ += seed;
        step();
    }

    std::uint64_t operator()()
    {
        step();
        return output(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01()
    {
        return static_cast<double>(operator()() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Consumes exactly one raw draw
    /// (multiply-shift reduction; bias is at most n / 2^64).
    std::uint64_t bounded(std::uint64_t n)
    {
        return static_cast<std::uint64_t>(
            (static_cast<u128>(operator()()) * n) >> 64);
    }

    /// Jump the stream forward by `n` draws in O(log n).
    void advance(std::uint64_t n)
    {
        u128 cur_mult = kMult;
        u128 cur_plus = inc_;
        u128 acc_mult = 1;
        u128 acc_plus = 0;
        while (n > 0) {
            if (n & 1) {
                acc_mult *= cur_mult;
                acc_plus = acc_plus * cur_mult + cur_plus;
            }
            cur_plus = (cur_mult + 1) * cur_plus;
            cur_mult *= cur_mult;
            n >>= 1;
        }
        state_ = acc_mult * state_ + acc_plus;
    }

    bool operator==(const Pcg64& other) const
    {
        return state_ == other.state_ && inc_ == other.inc_;
    }
    bool operator!=(const Pcg64& other) const { return !(*this == other); }

    /// Raw 128-bit state access for tests (hi/lo halves).
    void set_raw_state(std::uint64_t state_hi, std::uint64_t state_lo,
                       std::uint64_t inc_hi, std::uint64_t inc_lo)
    {
        state_ = (static_cast<u128>(state_hi) << 64) | state_lo;
        inc_ = (static_cast<u128>(inc_hi) << 64) | inc_lo;
    }

private:
    using u128 = unsigned __int128;

    static constexpr u128 kMult =
        (static_cast<u128>(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

    void step() { state_ = state_ * kMult + inc_; }

    static std::uint64_t output(u128 state)
    {
        const std::uint64_t xored =
            static_cast<std::uint64_t>(state >> 64) ^ static_cast<std::uint64_t>(state);
        const unsigned rot = static_cast<unsigned>(state >> 122);
        return (xored >> rot) | (xored << ((-rot) & 63));
    }

    u128 state_;
    u128 inc_;
};

} // namespace swarmtopo

#endif
