#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace xbound {

/// Seeded random stream with platform-independent output. std::mt19937_64 is
/// fully specified by the standard; doubles are derived from the raw 64-bit
/// words directly, never through distribution objects (whose algorithms are
/// implementation-defined).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in (0, 1].
    double next_open_unit() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_open_unit();
        double u2 = next_open_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace xbound
