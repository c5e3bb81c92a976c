// GF(2) polynomial algebra, primitivity testing and enumeration, LFSR
// m-sequence generation, and discrepancy sweep statistics.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/bitseq.hpp"

namespace debruijn {

// Polynomial over GF(2): bit i of coeffs is the coefficient of x^i; monic of
// the stated degree.
struct Poly2 {
    std::uint64_t coeffs = 0;
    int degree = 0;
};

// Accepts "1+x^2+x^5" (terms 1, x, x^k; spaces allowed) or a hex coefficient
// mask like "0x25".
Poly2 parse_poly(const std::string& text);
std::string format_poly(const Poly2& p);

// Feedback taps: output of the register is a_1, feedback xors a_i over taps.
struct FeedbackTaps {
    std::vector<int> taps;  // positions in 1..n, ascending
    int n = 0;
};

// Tap i is present iff the coefficient of x^{n+1-i} is set.
FeedbackTaps taps_from_poly(const Poly2& p);
// "a1^a4"; the register width cannot be inferred (a_n need not be tapped).
FeedbackTaps parse_taps(const std::string& text, int n);
std::string format_taps(const FeedbackTaps& t);

// a*b mod m over GF(2)[x]; arguments are residues of degree < deg(m).
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, const Poly2& m);

// True iff x has multiplicative order exactly 2^n - 1 modulo p (requires
// c_0 = c_n = 1; factors 2^n - 1 by trial division).
bool is_primitive(const Poly2& p);

// All primitive polynomials of degree n, ascending by coefficient value.
// Their number is phi(2^n - 1) / n.
std::vector<Poly2> enumerate_primitive(int n);

inline constexpr int kLfsrMaxDegree = 20;  // exhaustive enumeration budget

// Output a_1 before each register step; length 2^n - 1; every nonzero
// n-window appears exactly once when the taps come from a primitive
// polynomial. seed is a_1..a_n and must be nonzero.
BitSeq lfsr_m_sequence(const FeedbackTaps& taps, const BitSeq& seed);

// Insert a 0 before the circular substring 0^{n-1}1, extending the
// m-sequence into a de Bruijn sequence of order n.
BitSeq m_to_debruijn(const BitSeq& m, int n);

struct SweepStats {
    int n = 0;
    std::int64_t count = 0;
    std::int64_t min_disc = 0;
    std::int64_t max_disc = 0;
    std::int64_t sum_disc = 0;  // mean = sum_disc / count, kept exact
    double mean() const { return count ? double(sum_disc) / double(count) : 0.0; }
};

// For every primitive polynomial of degree n: seed 0^{n-1}1, build the
// de Bruijn sequence, take disc_linear; aggregate min/mean/max/count.
SweepStats sweep(int n);

std::uint64_t totient(std::uint64_t m);

}  // namespace debruijn
