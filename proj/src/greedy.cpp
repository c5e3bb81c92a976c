#include "debruijn/greedy.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace debruijn {

namespace {

void check_order(int n, int min_n) {
    if (n < min_n || n > kGreedyMaxOrder)
        throw std::length_error("order outside supported range");
}

class VisitedSet {
public:
    explicit VisitedSet(int n) : bits_((std::size_t(1) << n) / 64 + 1, 0) {}
    bool test(std::uint32_t w) const { return (bits_[w >> 6] >> (w & 63)) & 1u; }
    void set(std::uint32_t w) { bits_[w >> 6] |= std::uint64_t{1} << (w & 63); }

private:
    std::vector<std::uint64_t> bits_;
};

// Windows are read as n-bit integers with the most recent bit in the low
// position: stepping appends via w' = ((w << 1) | b) & mask.
struct LinearRun {
    int n;
    std::uint32_t mask;
    VisitedSet seen;
    std::string s;
    std::uint32_t window = 0;

    LinearRun(int n_, char seed_bit) : n(n_), mask((std::uint32_t(1) << n_) - 1), seen(n_) {
        s.assign(std::size_t(n), seed_bit);
        window = seed_bit == '1' ? mask : 0;
        seen.set(window);
    }

    bool try_append(char b, const std::vector<bool>* declined) {
        const std::uint32_t w = ((window << 1) | std::uint32_t(b == '1')) & mask;
        if (seen.test(w)) return false;
        if (declined && (*declined)[w]) return false;
        seen.set(w);
        window = w;
        s.push_back(b);
        return true;
    }
};

// A full linear run visits all 2^n windows: length 2^n + n - 1, and its last
// n-1 bits must replay the seed so the first 2^n bits close into a cycle.
BitSeq close_cycle(const std::string& s, int n) {
    const std::size_t total = std::size_t(1) << n;
    if (s.size() != total + std::size_t(n) - 1 ||
        s.compare(s.size() - std::size_t(n - 1), std::size_t(n - 1), s, 0, std::size_t(n - 1)) != 0)
        throw std::runtime_error("greedy run terminated before covering all windows");
    return BitSeq::from_string(s.substr(0, total));
}

char flip(char c) { return c == '0' ? '1' : '0'; }

}  // namespace

BitSeq prefer_one(int n) {
    check_order(n, 1);
    const std::size_t total = std::size_t(1) << n;
    LinearRun run(n, '0');
    while (run.s.size() < total) {
        if (!run.try_append('1', nullptr) && !run.try_append('0', nullptr))
            throw std::runtime_error("greedy run terminated before covering all windows");
    }
    // rotate the 0^n seed to the suffix
    return BitSeq::from_string(run.s.substr(std::size_t(n)) + run.s.substr(0, std::size_t(n)));
}

BitSeq prefer_same(int n) {
    check_order(n, 2);
    // the declined family: alternating prefix ending in 0, then b >= 2 ones
    std::vector<bool> declined(std::size_t(1) << n, false);
    for (int b = 2; b <= n - 1; ++b) {
        std::uint32_t w = (std::uint32_t(1) << b) - 1;  // low b bits: the 1-run
        for (int pos = b + 1; pos < n; pos += 2)        // alternating above a 0 at bit b
            w |= std::uint32_t(1) << pos;
        declined[w] = true;
    }
    LinearRun run(n, '1');
    const std::size_t linear_len = (std::size_t(1) << n) + std::size_t(n) - 1;
    while (run.s.size() < linear_len) {
        const char pref = run.s.back();
        if (run.try_append(pref, &declined) || run.try_append(flip(pref), &declined) ||
            run.try_append(pref, nullptr) || run.try_append(flip(pref), nullptr))
            continue;
        break;
    }
    return close_cycle(run.s, n);
}

BitSeq prefer_opposite(int n) {
    check_order(n, 2);
    const std::uint32_t exception_window = (std::uint32_t(1) << (n - 1)) - 1;  // 01^{n-1}
    LinearRun run(n, '0');
    const std::size_t linear_len = (std::size_t(1) << n) + std::size_t(n) - 1;
    while (run.s.size() < linear_len) {
        if (run.window == exception_window) {
            if (!run.try_append('1', nullptr))
                throw std::runtime_error("greedy run terminated before covering all windows");
            continue;
        }
        const char pref = flip(run.s.back());
        if (run.try_append(pref, nullptr) || run.try_append(flip(pref), nullptr))
            continue;
        break;
    }
    BitSeq cycle = close_cycle(run.s, n);
    // linearize from the alternating window 0101...
    std::string alt(std::size_t(n), '0');
    for (int i = 1; i < n; i += 2) alt[std::size_t(i)] = '1';
    const std::string doubled = cycle.to_string() + cycle.to_string();
    const std::size_t at = doubled.find(alt);
    return cycle.rotate(at);
}

}  // namespace debruijn
