// Packed circular binary sequence and the de Bruijn / Golomb checks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace debruijn {

// Immutable packed bit sequence with circular index semantics.
// Index 0 is the first emitted bit of whatever construction produced it.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::size_t len, bool fill = false);

    // Parses ASCII '0'/'1'; whitespace and U+00B7 separators are ignored.
    static BitSeq from_string(std::string_view text);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    // Circular access: any index is reduced modulo size().
    bool bit(std::size_t i) const {
        i %= len_;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(std::size_t i, bool v);   // i < size(); used by builders only
    void append(bool v);

    std::string to_string() const;

    // The n bits starting at `start`, wrapping circularly.
    BitSeq window(std::size_t start, std::size_t n) const;

    // Rotation starting at index k mod size().
    BitSeq rotate(std::size_t k) const;

    BitSeq complement() const;

    std::size_t count_ones() const;

    bool operator==(const BitSeq& other) const;
    bool operator!=(const BitSeq& other) const { return !(*this == other); }

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

// True iff seq.size() == 2^n and all 2^n circular n-windows are distinct.
// Uses a flat 2^n-bit seen-set; O(2^n) time.
bool is_de_bruijn(const BitSeq& seq, int n);

struct GolombStats {
    std::uint64_t ones = 0;
    std::uint64_t zeros = 0;
    std::uint64_t one_runs = 0;   // runs counted circularly
    std::uint64_t zero_runs = 0;
};

GolombStats golomb_stats(const BitSeq& seq);

// True iff b is some rotation of a.
bool rotation_equivalent(const BitSeq& a, const BitSeq& b);

}  // namespace debruijn
