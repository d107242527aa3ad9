#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace advicelab {

// Seeded generator with self-contained sampling helpers, so identical
// seeds give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform value in [0, n), rejection sampled.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform value in [lo, hi].
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        return lo + below(hi - lo + 1);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // k distinct values from {1..L}, in random order.
    std::vector<std::uint64_t> sample_distinct(std::uint64_t L, std::size_t k);

private:
    std::mt19937_64 eng_;
};

}  // namespace advicelab
