#ifndef LCYCLE_RNG_HPP
#define LCYCLE_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace lcycle {

// Mixes independent words (seed, trial index, ...) into one stream seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// mt19937_64 with explicit draw helpers. std::uniform_int_distribution and
// friends are not pinned by the standard, so all derived draws go through
// these to keep results identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // unbiased value in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // uniform double in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // m distinct values sampled from [0, n), ascending
    std::vector<int> sample(int n, int m) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        shuffle(pool);
        pool.resize(static_cast<std::size_t>(m));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace lcycle

#endif
