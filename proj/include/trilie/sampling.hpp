#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "trilie/algebra.hpp"

namespace trilie {

// Seeded source of small random integers. Values come straight from the
// engine output so sequences are identical across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    LinearMap map(std::size_t n, long lo = -3, long hi = 3) {
        LinearMap f(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                f(r, c) = integer(lo, hi);
            }
        }
        return f;
    }

    Vector vector(std::size_t n, long lo = -3, long hi = 3) {
        Vector v(n);
        for (auto& x : v) {
            x = integer(lo, hi);
        }
        return v;
    }

private:
    std::mt19937_64 engine_;
};

using FiveTuple = std::array<std::size_t, 5>;

// How 5-tuple scans run: exhaustively when n^5 <= max_exhaustive, otherwise
// on max_exhaustive seeded random tuples (and the result says so).
struct TupleScan {
    std::size_t max_exhaustive = 32768;  // 8^5
    std::uint64_t seed = 0;
};

// Calls fn(tuple) for each scanned tuple until fn returns false. Returns true
// when the scan was sampled rather than exhaustive.
template <typename Fn>
bool scan_five_tuples(std::size_t n, const TupleScan& scan, Fn&& fn) {
    std::size_t total = 1;
    bool overflow = false;
    for (int i = 0; i < 5; ++i) {
        if (n != 0 && total > scan.max_exhaustive / n + 1) {
            overflow = true;
        }
        total *= n;
    }
    if (n == 0) {
        return false;
    }
    if (!overflow && total <= scan.max_exhaustive) {
        FiveTuple t{};
        for (t[0] = 0; t[0] < n; ++t[0])
            for (t[1] = 0; t[1] < n; ++t[1])
                for (t[2] = 0; t[2] < n; ++t[2])
                    for (t[3] = 0; t[3] < n; ++t[3])
                        for (t[4] = 0; t[4] < n; ++t[4])
                            if (!fn(t)) {
                                return false;
                            }
        return false;
    }
    Sampler s(scan.seed);
    for (std::size_t draw = 0; draw < scan.max_exhaustive; ++draw) {
        FiveTuple t{};
        for (auto& x : t) {
            x = s.index(n);
        }
        if (!fn(t)) {
            break;
        }
    }
    return true;
}

} // namespace trilie
