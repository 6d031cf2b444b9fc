#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sparsecut {

// Seeded generator with portable draws. std::uniform_int_distribution and
// std::shuffle are implementation-defined, which would make seeded corpora
// differ between standard libraries; mt19937_64 output itself is specified.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sparsecut
