#ifndef LEF_SAMPLER_HPP
#define LEF_SAMPLER_HPP

#include "lef/ring.hpp"
#include "lef/scalar.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace lef {

/// Seeded source of "general" objects (linear forms, points).
///
/// The verdicts this library computes quantify over general linear forms
/// or points; by semicontinuity the generic value is attained on a dense
/// open set, so we draw `count` samples with small integer coordinates
/// and aggregate (max for ranks, min for h^0). Draws avoid
/// std::uniform_int_distribution so that a seed pins the exact byte
/// stream on every platform.
class Sampler {
public:
    static constexpr std::uint64_t default_seed = 20240811;
    static constexpr int default_count = 3;

    explicit Sampler(std::uint64_t seed = default_seed,
                     int count = default_count)
        : rng_(seed), seed_(seed), count_(count) {
        if (count < 1) throw input_error("sample count must be >= 1");
    }

    std::uint64_t seed() const { return seed_; }
    int count() const { return count_; }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant for
    /// genericity and the draw is platform-stable.
    long long int_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(rng_() % span);
    }

    /// Nonzero integer in [-100, 100].
    long long small_nonzero() {
        long long v = 0;
        while (v == 0) v = int_in(-100, 100);
        return v;
    }

    template <class K>
    LinearForm<K> linear_form(int num_vars) {
        while (true) {
            std::vector<K> c(num_vars);
            bool nonzero = false;
            for (int v = 0; v < num_vars; ++v) {
                const long long x = int_in(-100, 100);
                c[v] = K(x);
                nonzero = nonzero || x != 0;
            }
            if (nonzero) return LinearForm<K>(std::move(c));
        }
    }

    /// Point with every coordinate nonzero, off all coordinate hyperplanes.
    template <class K>
    Point<K> point_all_nonzero(int num_vars) {
        std::vector<K> c(num_vars);
        for (int v = 0; v < num_vars; ++v) c[v] = K(small_nonzero());
        return Point<K>(std::move(c));
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t seed_;
    int count_;
};

} // namespace lef

#endif // LEF_SAMPLER_HPP
