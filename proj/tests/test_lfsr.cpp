#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "debruijn/bitseq.hpp"
#include "debruijn/discrepancy.hpp"
#include "debruijn/lfsr.hpp"
#include "fixtures.hpp"

using namespace debruijn;

namespace {

// order of x in GF(2)[x]/(p) by stepping, or 0 if x^k never returns to 1
std::uint64_t brute_order(const Poly2& p) {
    const std::uint64_t limit = (std::uint64_t{1} << p.degree) - 1;
    const std::uint64_t x = poly_mulmod(1, 2, p);
    std::uint64_t cur = x;  // x^k at the top of iteration k
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (cur == 1) return k;
        cur = poly_mulmod(cur, x, p);
    }
    return 0;
}

BitSeq standard_seed(int n) {
    BitSeq seed{std::size_t(n)};
    seed.set_bit(std::size_t(n) - 1, true);
    return seed;
}

}  // namespace

TEST_CASE("polynomial parsing and formatting") {
    const Poly2 p = parse_poly("1+x^2+x^5");
    CHECK(p.coeffs == 0b100101);
    CHECK(p.degree == 5);
    CHECK(parse_poly("0x25").coeffs == 0b100101);
    CHECK(parse_poly("0x25").degree == 5);
    CHECK(parse_poly(" 1 + x ").coeffs == 0b11);
    CHECK(format_poly(p) == "1+x^2+x^5");
    CHECK(format_poly(parse_poly("x+x^3")) == "x+x^3");
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^2+x^2"), std::invalid_argument);  // cancels to zero
    CHECK_THROWS_AS(parse_poly("y+1"), std::invalid_argument);
}

TEST_CASE("carry-less multiply-reduce") {
    const Poly2 m{0b111, 2};  // x^2+x+1
    CHECK(poly_mulmod(0b10, 0b10, m) == 0b11);  // x*x = x+1
    const Poly2 m5 = parse_poly("1+x^2+x^5");
    for (std::uint64_t a = 0; a < 32; ++a) {
        CHECK(poly_mulmod(a, 1, m5) == a);
        CHECK(poly_mulmod(1, a, m5) == a);
        for (std::uint64_t b = 0; b < 32; ++b)
            CHECK(poly_mulmod(a, b, m5) == poly_mulmod(b, a, m5));
    }
    // x^4 needs no reduction below degree 5
    CHECK(poly_mulmod(0b100, 0b100, m5) == 0b10000);
}

TEST_CASE("primitivity on known polynomials") {
    CHECK(is_primitive(parse_poly("1+x^2+x^5")));
    CHECK_FALSE(is_primitive(parse_poly("1+x^2")));   // (x+1)^2
    CHECK_FALSE(is_primitive(parse_poly("1+x^4")));
    CHECK(is_primitive(parse_poly("1+x+x^2")));
    CHECK_FALSE(is_primitive(Poly2{0b110, 2}));       // c_0 = 0
}

TEST_CASE("primitivity agrees with the brute-force order of x") {
    for (int n = 2; n <= 8; ++n) {
        const std::uint64_t order = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = std::uint64_t{1} << n; mask < std::uint64_t{1} << (n + 1);
             ++mask) {
            const Poly2 p{mask, n};
            CAPTURE(mask);
            CHECK(is_primitive(p) == (brute_order(p) == order));
        }
    }
}

TEST_CASE("primitive-polynomial counts match the totient formula") {
    for (int n = 2; n <= 14; ++n) {
        CAPTURE(n);
        CHECK(enumerate_primitive(n).size() ==
              totient((std::uint64_t{1} << n) - 1) / std::uint64_t(n));
    }
    CHECK(enumerate_primitive(10).size() == 60);
    CHECK(enumerate_primitive(11).size() == 176);
    CHECK(enumerate_primitive(12).size() == 144);
    CHECK_THROWS_AS(enumerate_primitive(0), std::length_error);
    CHECK_THROWS_AS(enumerate_primitive(kLfsrMaxDegree + 1), std::length_error);
}

TEST_CASE("tap derivation and round-trip") {
    const FeedbackTaps t = taps_from_poly(parse_poly("1+x^2+x^5"));
    CHECK(t.n == 5);
    CHECK(t.taps == std::vector<int>{1, 4});
    CHECK(format_taps(t) == "a1^a4");
    const FeedbackTaps u = parse_taps("a1^a4", 5);
    CHECK(u.n == 5);
    CHECK(u.taps == t.taps);
    CHECK_THROWS_AS(parse_taps("a9", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_taps("", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_taps("b2", 5), std::invalid_argument);
}

TEST_CASE("width-5 register reproduces the reference m-sequence") {
    const BitSeq m = lfsr_m_sequence(parse_taps("a1^a4", 5), BitSeq::from_string("00001"));
    CHECK(m.to_string() == fixtures::kMseq5);
    CHECK(m.size() == 31);

    // every nonzero 5-window appears exactly once circularly
    std::set<std::string> seen;
    for (std::size_t i = 0; i < m.size(); ++i)
        seen.insert(m.window(i, 5).to_string());
    CHECK(seen.size() == 31);
    CHECK(seen.count("00000") == 0);
}

TEST_CASE("width-2 register") {
    const BitSeq m = lfsr_m_sequence(taps_from_poly(parse_poly("1+x+x^2")),
                                     BitSeq::from_string("01"));
    CHECK(m.to_string() == "011");
}

TEST_CASE("m-sequence argument validation") {
    const FeedbackTaps t = parse_taps("a1^a4", 5);
    CHECK_THROWS_AS(lfsr_m_sequence(t, BitSeq::from_string("00000")), std::invalid_argument);
    CHECK_THROWS_AS(lfsr_m_sequence(t, BitSeq::from_string("001")), std::invalid_argument);
}

TEST_CASE("extension to a de Bruijn sequence") {
    const BitSeq m = BitSeq::from_string(fixtures::kMseq5);
    const BitSeq db = m_to_debruijn(m, 5);
    CHECK(db.to_string() == std::string("0") + fixtures::kMseq5);
    CHECK(is_de_bruijn(db, 5));
    CHECK_THROWS_AS(m_to_debruijn(BitSeq::from_string("1111"), 3), std::invalid_argument);
}

TEST_CASE("extension handles a wrapped zero run") {
    // rotate the m-sequence so its 0^4 block spans the end; the inserted 0
    // must extend that run without splitting any window
    const BitSeq m = BitSeq::from_string(fixtures::kMseq5).rotate(2);
    CHECK(is_de_bruijn(m_to_debruijn(m, 5), 5));
}

TEST_CASE("all primitive-polynomial sequences of width 8 are de Bruijn") {
    const BitSeq seed = standard_seed(8);
    for (const Poly2& p : enumerate_primitive(8)) {
        const BitSeq db = m_to_debruijn(lfsr_m_sequence(taps_from_poly(p), seed), 8);
        CAPTURE(format_poly(p));
        REQUIRE(is_de_bruijn(db, 8));
    }
}

TEST_CASE("width-10 sweep statistics") {
    const SweepStats st = sweep(10);
    CHECK(st.n == 10);
    CHECK(st.count == 60);
    CHECK(st.min_disc == 36);
    CHECK(st.max_disc == 46);
    CHECK(st.sum_disc == 2434);  // mean 40.566..., prints as 40.57
}

TEST_CASE("reference tap sets and their discrepancies") {
    struct Row {
        int n;
        const char* taps;
        std::int64_t disc;
    };
    const Row rows[] = {{10, "a1^a2^a6^a9", 46},
                        {11, "a1^a6^a7^a10", 68},
                        {12, "a1^a4^a7^a8^a9^a12", 99}};
    for (const Row& r : rows) {
        const BitSeq db =
            m_to_debruijn(lfsr_m_sequence(parse_taps(r.taps, r.n), standard_seed(r.n)), r.n);
        CAPTURE(r.n);
        REQUIRE(is_de_bruijn(db, r.n));
        CHECK(disc_linear(db).discrepancy == r.disc);
    }
}

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(1023) == 600);
    CHECK(totient(1 << 10) == 512);
}
