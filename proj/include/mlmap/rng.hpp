#pragma once

#include <cstdint>

#include "mlmap/geometry.hpp"

namespace mlmap {

// splitmix64 finalizer; the basis of all keyed random streams.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr double to_unit_interval(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
}

// Counter-based stream keyed by (seed, scan index, cell, stream tag):
// every draw is a pure function of its key, so results do not depend on
// iteration order and sub-batch splits reproduce the same values.
struct ScanRng {
    std::uint64_t seed = 0;
    std::uint64_t scan_index = 0;

    static constexpr std::uint32_t kSemanticStream = 0;  // y' draws
    static constexpr std::uint32_t kFrictionStream = 1;  // f' draws

    double uniform(const CellCoord& cell, std::uint32_t stream) const {
        std::uint64_t h = mix64(seed);
        h = mix64(h ^ scan_index);
        h = mix64(h ^ static_cast<std::uint32_t>(cell.i));
        h = mix64(h ^ static_cast<std::uint32_t>(cell.j));
        h = mix64(h ^ static_cast<std::uint32_t>(cell.k));
        h = mix64(h ^ stream);
        return to_unit_interval(h);
    }
};

// Sequential generator for synthetic data; self-contained so outputs are
// identical across platforms and standard-library versions.
class SequenceRng {
public:
    explicit SequenceRng(std::uint64_t seed) : state_(mix64(seed)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    double uniform() { return to_unit_interval(next_u64()); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace mlmap
