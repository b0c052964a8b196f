#pragma once

#include <cstdint>
#include <vector>

namespace incpath {

// Deterministic splitmix64 generator. Everything randomized in this project
// (trial labelings, generated instances, anneal restarts) goes through this
// type so that reports are reproducible across platforms; std::uniform_*
// distributions are implementation-defined and therefore avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n), n > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int intIn(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Random permutation of 0..n-1.
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

    // Derives an independent stream, so per-trial randomness does not depend
    // on how many draws earlier trials consumed.
    Rng fork(std::uint64_t tag) {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace incpath
