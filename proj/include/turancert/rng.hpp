#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace turancert {

// All randomness flows through this wrapper.  std::mt19937_64 has an output
// sequence fixed by the standard, and the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined --
// two builds on different platforms must sample identical graphs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform on [0, bound); rejection sampling above the largest multiple
    std::uint64_t below(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t max = std::mt19937_64::max();
        const std::uint64_t limit = max - max % bound;  // multiple of bound
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // [0, 1), 53 usable bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Floyd's sampling: k distinct values out of [0, population).  Order of the
// result is deterministic but not meaningful.
inline std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population,
                                                  std::uint64_t k) {
    assert(k <= population);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t j = population - k; j < population; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (seen.insert(t).second) {
            out.push_back(t);
        } else {
            seen.insert(j);
            out.push_back(j);
        }
    }
    return out;
}

}  // namespace turancert
