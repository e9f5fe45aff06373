#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace shoulderx {

/// Deterministic random source used everywhere randomness is needed.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives all variates with explicit arithmetic instead of the standard
/// distributions, whose algorithms are implementation-defined. A given seed
/// therefore produces the same stream on every platform and toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller (explicit, so the stream is portable).
    double normal();

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// splitmix64 finalizer; decorrelates nearby seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Derives an independent stream seed from a global seed and a text tag
/// (e.g. a sample id), so per-item generators never share state.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view tag);

} // namespace shoulderx
