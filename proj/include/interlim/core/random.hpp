#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace interlim {

// splitmix64 finalizer, used to decorrelate derived seeds
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of the index-th independent stream under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Explicit random stream handle. Not thread-safe; give each worker its own.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return eng_; }

    std::uint64_t bits() { return eng_(); }

    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(eng_);
    }

    // uniform real in [0, 1)
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }

    double normal() { return nd_(eng_); }

    bool coin() { return (eng_() >> 63) != 0; }

    Rng split(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

private:
    std::mt19937_64 eng_;
    std::uint64_t seed_;
    std::normal_distribution<double> nd_{0.0, 1.0};
};

}  // namespace interlim
