#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperricci/errors.hpp"

namespace hyperricci {

// splitmix64 mix; used to derive independent substream seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Portable generator: the mt19937_64 output sequence is fixed by the C++ standard, and
// bounded sampling is done by rejection below instead of std::uniform_int_distribution
// (whose mapping is implementation-defined). Same seed -> same bytes on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform over [0, n), no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw InputError("uniform_index: empty range");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x > limit);
        return x % n;
    }

    // k distinct values from [0, n), ascending. Partial Fisher-Yates.
    std::vector<int> sample_without_replacement(int k, int n) {
        if (k < 0 || k > n) throw InputError("sample_without_replacement: k out of range");
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + int(uniform_index(std::uint64_t(n - i)));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hyperricci
