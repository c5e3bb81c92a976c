#include "debruijn/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "debruijn/discrepancy.hpp"

namespace debruijn {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

std::uint64_t poly_powmod(std::uint64_t base, std::uint64_t e, const Poly2& m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, const Poly2& m) {
    std::uint64_t r = 0;
    while (a) {
        if (a & 1) r ^= b;
        a >>= 1;
        b <<= 1;
    }
    for (int d = 63 - std::countl_zero(r | 1); d >= m.degree; --d)
        if ((r >> d) & 1)
            r ^= m.coeffs << (d - m.degree);
    return r;
}

bool is_primitive(const Poly2& p) {
    const int n = p.degree;
    if (n > 31) throw std::length_error("primitivity test limited to degree 31");
    if (n < 1) return false;
    if (!(p.coeffs & 1) || !((p.coeffs >> n) & 1)) return false;  // need c_0 = c_n = 1
    if (int(std::bit_width(p.coeffs)) - 1 != n) return false;
    const std::uint64_t order = (std::uint64_t{1} << n) - 1;
    if (poly_powmod(2, order, p) != 1) return false;
    for (std::uint64_t q : prime_factors(order))
        if (poly_powmod(2, order / q, p) == 1) return false;
    return true;
}

std::vector<Poly2> enumerate_primitive(int n) {
    if (n < 1 || n > kLfsrMaxDegree) throw std::length_error("degree outside enumeration budget");
    std::vector<Poly2> out;
    if (n == 1) {
        out.push_back(Poly2{0b11, 1});  // 1 + x
        return out;
    }
    for (std::uint64_t mask = (std::uint64_t{1} << n) | 1; mask < std::uint64_t{1} << (n + 1); mask += 2) {
        Poly2 p{mask, n};
        if (is_primitive(p)) out.push_back(p);
    }
    return out;
}

Poly2 parse_poly(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty polynomial");
    Poly2 p;
    if (t.starts_with("0x") || t.starts_with("0X")) {
        p.coeffs = std::stoull(t.substr(2), nullptr, 16);
        if (p.coeffs == 0) throw std::invalid_argument("zero polynomial");
        p.degree = std::bit_width(p.coeffs) - 1;
        return p;
    }
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t next = t.find('+', pos);
        if (next == std::string::npos) next = t.size();
        const std::string term = t.substr(pos, next - pos);
        int e;
        if (term == "1")
            e = 0;
        else if (term == "x")
            e = 1;
        else if (term.starts_with("x^"))
            e = std::stoi(term.substr(2));
        else
            throw std::invalid_argument("bad polynomial term: " + term);
        if (e < 0 || e > 62) throw std::invalid_argument("exponent out of range");
        p.coeffs ^= std::uint64_t{1} << e;
        pos = next + 1;
    }
    if (p.coeffs == 0) throw std::invalid_argument("zero polynomial");
    p.degree = std::bit_width(p.coeffs) - 1;
    return p;
}

std::string format_poly(const Poly2& p) {
    std::string out;
    for (int e = 0; e <= p.degree; ++e) {
        if (!((p.coeffs >> e) & 1)) continue;
        if (!out.empty()) out += '+';
        if (e == 0)
            out += '1';
        else if (e == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(e);
    }
    return out;
}

FeedbackTaps taps_from_poly(const Poly2& p) {
    FeedbackTaps t;
    t.n = p.degree;
    for (int i = 1; i <= t.n; ++i)
        if ((p.coeffs >> (t.n + 1 - i)) & 1) t.taps.push_back(i);
    return t;
}

FeedbackTaps parse_taps(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("register width must be positive");
    FeedbackTaps t;
    t.n = n;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('^', pos);
        if (next == std::string::npos) next = text.size();
        const std::string term = text.substr(pos, next - pos);
        if (term.size() < 2 || term[0] != 'a')
            throw std::invalid_argument("bad tap term: " + term);
        const int i = std::stoi(term.substr(1));
        if (i < 1 || i > n) throw std::invalid_argument("tap position out of range: " + term);
        t.taps.push_back(i);
        pos = next + 1;
    }
    if (t.taps.empty()) throw std::invalid_argument("empty tap list");
    std::sort(t.taps.begin(), t.taps.end());
    return t;
}

std::string format_taps(const FeedbackTaps& t) {
    std::string out;
    for (int i : t.taps) {
        if (!out.empty()) out += '^';
        out += 'a' + std::to_string(i);
    }
    return out;
}

BitSeq lfsr_m_sequence(const FeedbackTaps& taps, const BitSeq& seed) {
    const int n = taps.n;
    if (n < 1 || n > 62) throw std::invalid_argument("register width out of range");
    if (seed.size() != std::size_t(n)) throw std::invalid_argument("seed width must equal register width");
    // a_1 lives at bit n-1, a_n at bit 0
    std::uint64_t state = 0;
    for (int i = 0; i < n; ++i) state = (state << 1) | seed.bit(std::size_t(i));
    if (state == 0) throw std::invalid_argument("zero seed is a fixed point");
    std::uint64_t tapmask = 0;
    for (int i : taps.taps) {
        if (i < 1 || i > n) throw std::invalid_argument("tap position out of range");
        tapmask |= std::uint64_t{1} << (n - i);
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t len = mask;  // 2^n - 1
    BitSeq out(len);
    for (std::uint64_t k = 0; k < len; ++k) {
        out.set_bit(k, (state >> (n - 1)) & 1);
        const std::uint64_t f = std::uint64_t(std::popcount(state & tapmask)) & 1;
        state = ((state << 1) & mask) | f;
    }
    return out;
}

BitSeq m_to_debruijn(const BitSeq& m, int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    const std::size_t len = m.size();
    std::size_t at = len;
    for (std::size_t i = 0; i < len && at == len; ++i) {
        bool match = m.bit(i + std::size_t(n) - 1);
        for (int k = 0; k < n - 1 && match; ++k)
            match = !m.bit(i + std::size_t(k));
        if (match) at = i;
    }
    if (at == len) throw std::invalid_argument("substring 0^{n-1}1 absent; not an m-sequence");
    BitSeq out(len + 1);
    if (at + std::size_t(n) - 1 < len) {
        for (std::size_t i = 0; i < at; ++i) out.set_bit(i, m.bit(i));
        // the inserted 0 lands in front of the zero run
        for (std::size_t i = at; i < len; ++i) out.set_bit(i + 1, m.bit(i));
    } else {
        // the zero run wraps; appending the 0 at the end extends it in place
        for (std::size_t i = 0; i < len; ++i) out.set_bit(i, m.bit(i));
    }
    return out;
}

SweepStats sweep(int n) {
    SweepStats st;
    st.n = n;
    BitSeq seed{std::size_t(n)};
    seed.set_bit(std::size_t(n) - 1, true);  // 0^{n-1}1
    bool first = true;
    for (const Poly2& p : enumerate_primitive(n)) {
        const BitSeq db = m_to_debruijn(lfsr_m_sequence(taps_from_poly(p), seed), n);
        const std::int64_t d = disc_linear(db).discrepancy;
        st.count += 1;
        st.sum_disc += d;
        st.min_disc = first ? d : std::min(st.min_disc, d);
        st.max_disc = first ? d : std::max(st.max_disc, d);
        first = false;
    }
    return st;
}

std::uint64_t totient(std::uint64_t m) {
    std::uint64_t r = m;
    for (std::uint64_t q : prime_factors(m)) r -= r / q;
    return r;
}

}  // namespace debruijn
