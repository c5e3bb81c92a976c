#include "debruijn/bitseq.hpp"

#include <bit>
#include <stdexcept>

namespace debruijn {

BitSeq::BitSeq(std::size_t len, bool fill) : words_((len + 63) / 64, fill ? ~0ull : 0ull), len_(len) {
    if (fill && len % 64 != 0 && !words_.empty())
        words_.back() &= (1ull << (len % 64)) - 1;
}

BitSeq BitSeq::from_string(std::string_view text) {
    BitSeq out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c == '0' || c == '1') {
            out.append(c == '1');
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == 0xC2 || c == 0xB7) {
            continue;  // whitespace or the UTF-8 bytes of a U+00B7 separator
        } else {
            throw std::invalid_argument("bit string may contain only '0', '1', whitespace, and separators");
        }
    }
    return out;
}

void BitSeq::set_bit(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("set_bit index past end");
    if (v)
        words_[i >> 6] |= 1ull << (i & 63);
    else
        words_[i >> 6] &= ~(1ull << (i & 63));
}

void BitSeq::append(bool v) {
    if (len_ % 64 == 0) words_.push_back(0);
    if (v) words_[len_ >> 6] |= 1ull << (len_ & 63);
    ++len_;
}

std::string BitSeq::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

BitSeq BitSeq::window(std::size_t start, std::size_t n) const {
    if (n < 1 || n > len_) throw std::length_error("window length out of range");
    BitSeq out(n);
    for (std::size_t i = 0; i < n; ++i)
        out.set_bit(i, bit(start + i));
    return out;
}

BitSeq BitSeq::rotate(std::size_t k) const {
    if (len_ == 0) return *this;
    BitSeq out(len_);
    for (std::size_t i = 0; i < len_; ++i)
        out.set_bit(i, bit(k + i));
    return out;
}

BitSeq BitSeq::complement() const {
    BitSeq out(len_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        out.words_[w] = ~words_[w];
    if (len_ % 64 != 0 && !out.words_.empty())
        out.words_.back() &= (1ull << (len_ % 64)) - 1;
    return out;
}

std::size_t BitSeq::count_ones() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool BitSeq::operator==(const BitSeq& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

bool is_de_bruijn(const BitSeq& seq, int n) {
    if (n < 1 || n >= 63) return false;
    if (seq.size() != (std::uint64_t{1} << n)) return false;
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t mask = total - 1;
    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    std::uint64_t w = 0;
    for (int i = 0; i < n - 1; ++i) w = (w << 1) | seq.bit(i);
    for (std::uint64_t i = 0; i < total; ++i) {
        w = ((w << 1) | seq.bit(i + n - 1)) & mask;
        if ((seen[w >> 6] >> (w & 63)) & 1u) return false;
        seen[w >> 6] |= std::uint64_t{1} << (w & 63);
    }
    return true;
}

GolombStats golomb_stats(const BitSeq& seq) {
    GolombStats st;
    if (seq.empty()) return st;
    st.ones = seq.count_ones();
    st.zeros = seq.size() - st.ones;
    std::uint64_t transitions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq.bit(i) != seq.bit(i + 1)) ++transitions;
    if (transitions == 0) {
        // a constant circular sequence is one run of its only symbol
        (seq.bit(0) ? st.one_runs : st.zero_runs) = 1;
    } else {
        st.one_runs = st.zero_runs = transitions / 2;
    }
    return st;
}

bool rotation_equivalent(const BitSeq& a, const BitSeq& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::string da = a.to_string();
    da += da;
    return da.find(b.to_string()) != std::string::npos;
}

}  // namespace debruijn
