#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

// FNV-1a, used for stable content hashing (not cryptographic).
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// First 8 hex digits of fnv1a64; used for deterministic distractor ids.
inline std::string hash8(std::string_view s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(8, '0');
    for (int i = 0; i < 8; ++i) {
        out[i] = digits[(h >> (60 - 4 * i)) & 0xF];
    }
    return out;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic RNG with fully specified draw semantics, so seeded results
// are identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Mixes a seed with string context (e.g. per-source or per-query streams).
    static Rng derive(std::uint64_t seed, std::string_view context) {
        std::uint64_t s = seed ^ fnv1a64(context);
        splitmix64(s);  // decorrelate nearby seeds
        return Rng(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, n) via 128-bit multiply-shift; n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double p_true) { return next_double() < p_true; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    // Picks k distinct indices from [0, n) by partial Fisher-Yates; the
    // returned order is the draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) k = n;
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::uint64_t state_;
};

// Stable hash of several string parts, for order-independent per-item seeds.
inline std::uint64_t hash_parts(std::initializer_list<std::string_view> parts) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto p : parts) {
        for (unsigned char c : p) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1F;  // separator so ("ab","c") != ("a","bc")
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace forge
