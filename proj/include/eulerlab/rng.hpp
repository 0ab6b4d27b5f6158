#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eulerlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 with hand-rolled distributions so that streams are identical
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    double uniform01() { // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    long uniform_int(long lo, long hi) { // inclusive
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian() {
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // uniform in the closed unit ball of R^dim
    std::vector<double> unit_ball(int dim) {
        std::vector<double> v(dim);
        double norm2 = 0;
        do {
            norm2 = 0;
            for (auto& x : v) {
                x = gaussian();
                norm2 += x * x;
            }
        } while (norm2 == 0);
        const double r = std::pow(uniform01(), 1.0 / dim) / std::sqrt(norm2);
        for (auto& x : v) x *= r;
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace eulerlab
