#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace phyloshape {

/// Deterministic random source. All transforms (normal, exponential, bounded
/// ints) are spelled out here instead of using std:: distributions, whose
/// algorithms are implementation-defined; this keeps seeded runs and frozen
/// test values stable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller. Consumes exactly two draws per call.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // u1 == 0 would blow up the log
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double exponential(double rate) {
        double u = uniform();
        if (u >= 1.0) u = 1.0 - 0x1.0p-53;
        return -std::log(1.0 - u) / rate;
    }

    /// Uniform integer in [0, n). Rejection sampling, bias-free.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static constexpr double pi_ = 3.14159265358979323846;
    std::mt19937_64 gen_;
};

}  // namespace phyloshape
