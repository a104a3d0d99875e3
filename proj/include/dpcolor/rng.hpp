#pragma once

#include <cstdint>
#include <vector>

namespace dpc {

// Small deterministic generator (splitmix64 core). We avoid std::uniform_int_distribution
// because its output is not pinned across standard library implementations, and seeded
// runs must be reproducible byte-for-byte.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        // rejection sampling to avoid modulo bias
        uint64_t limit = n * (UINT64_MAX / n);
        uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

    bool coin() { return (next() & 1ull) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derived stream, for per-item seeding inside batches.
    Rng fork(uint64_t salt) {
        uint64_t s = state_ ^ (salt * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
        return Rng(s);
    }

private:
    uint64_t state_;
};

} // namespace dpc
