#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wayfind {

inline constexpr double kPi = 3.14159265358979323846;

// Geometric tolerance in meters. Grazing contact counts as blocked.
inline constexpr double kGeomEps = 1e-9;

// A discrete distribution over the M routes of an intersection.
using RouteDistribution = std::vector<double>;

// Precondition violations on mathematical/geometric domains.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario parsing/validation failures; message names the offending field.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures; message carries the path.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline RouteDistribution uniform_distribution(std::size_t m) {
    return RouteDistribution(m, 1.0 / static_cast<double>(m));
}

inline bool is_distribution(const RouteDistribution& p, double tol = 1e-9) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0) || x > 1.0 + tol) return false;
        sum += x;
    }
    return std::abs(sum - 1.0) <= tol;
}

// Renormalizes in place; throws if the mass is not positive.
inline void normalize(RouteDistribution& p) {
    double sum = 0.0;
    for (double x : p) sum += x;
    if (!(sum > 0.0)) throw DomainError("normalize: non-positive mass");
    for (double& x : p) x /= sum;
}

inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a base seed and a stream id.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    uint64_t s = base ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    return splitmix64(s);
}

// Deterministic uniform RNG. The 53-bit double mapping is done by hand so
// outputs do not depend on the standard library's distribution internals.
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int k = static_cast<int>(uniform() * span);
        if (k >= span) k = span - 1;
        return lo + k;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wayfind
