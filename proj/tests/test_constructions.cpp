#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "debruijn/bitseq.hpp"
#include "debruijn/constructions.hpp"
#include "debruijn/discrepancy.hpp"
#include "fixtures.hpp"

using namespace debruijn;

TEST_CASE("co-necklace concatenations, order 5") {
    CHECK(ccr2(5).to_string() == fixtures::kCcr2n5);
    CHECK(ccr3(5).to_string() == fixtures::kCcr3n5);
}

TEST_CASE("co-necklace concatenations are de Bruijn with bounded discrepancy") {
    for (int n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const BitSeq a = ccr2(n);
        const BitSeq b = ccr3(n);
        REQUIRE(is_de_bruijn(a, n));
        REQUIRE(is_de_bruijn(b, n));
        CHECK(disc_linear(a).discrepancy <= 2 * n);
        CHECK(disc_linear(b).discrepancy <= 2 * n);
    }
}

TEST_CASE("weight-bounded concatenations, order 6") {
    CHECK(min_weight_db(6, 3).to_string() == fixtures::kMinWeight63);
    CHECK(min_weight_db(6, 4).to_string() == fixtures::kMinWeight64);
    CHECK(max_weight_db(6, 4).to_string() == fixtures::kMaxWeight64);
    CHECK(weight_range_db(6).to_string() == fixtures::kWeightRange6);
    CHECK(is_de_bruijn(weight_range_db(6), 6));
}

TEST_CASE("unconstrained concatenation is the lex-least de Bruijn sequence") {
    CHECK(min_weight_db(3, 0).to_string() == "00010111");
    CHECK(min_weight_db(4, 0).to_string() == "0000100110101111");
    for (int n = 2; n <= 12; ++n) {
        CAPTURE(n);
        REQUIRE(is_de_bruijn(min_weight_db(n, 0), n));
    }
}

TEST_CASE("min-weight sequence holds every heavy window exactly once") {
    for (int n = 2; n <= 10; ++n) {
        for (int d = 0; d < n; ++d) {  // d = n degenerates to "1", shorter than a window
            const BitSeq s = min_weight_db(n, d);
            std::set<std::string> seen;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const BitSeq w = s.window(i, std::size_t(n));
                CHECK(w.count_ones() >= std::size_t(d));
                seen.insert(w.to_string());
            }
            CAPTURE(n);
            CAPTURE(d);
            // distinct windows; their count equals the sequence length
            CHECK(seen.size() == s.size());
        }
    }
}

TEST_CASE("degenerate weight bounds") {
    CHECK(min_weight_db(5, 5).to_string() == "1");
    CHECK(max_weight_db(5, 5).to_string() == "0");
}

TEST_CASE("suffix-ones rotation") {
    CHECK(rotate_suffix_ones(BitSeq::from_string("0011"), 3).to_string() == "1100");
    CHECK(rotate_suffix_ones(BitSeq::from_string("0011"), 1).to_string() == "0011");
    CHECK(rotate_suffix_ones(BitSeq::from_string("00111"), 4).to_string() == "11100");
    CHECK_THROWS_AS(rotate_suffix_ones(BitSeq::from_string("0110"), 3), std::invalid_argument);
    CHECK_THROWS_AS(rotate_suffix_ones(BitSeq::from_string("01"), 0), std::invalid_argument);
}

TEST_CASE("windows of the glued range construction stay in the middle weights") {
    for (int n = 4; n <= 10; ++n) {
        CAPTURE(n);
        const BitSeq s = weight_range_db(n);
        REQUIRE(is_de_bruijn(s, n));
    }
}

TEST_CASE("binomial imbalance values") {
    CHECK(binomial_imbalance(10, 1) == 9);
    CHECK(binomial_imbalance(10, 4) == 126);
    CHECK(binomial_imbalance(6, 0) == 1);
    CHECK(binomial_imbalance(6, 5) == 1);
    CHECK(binomial_imbalance(2, 1) == 1);
    CHECK_THROWS_AS(binomial_imbalance(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(binomial_imbalance(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial_imbalance(6, -1), std::invalid_argument);
}

TEST_CASE("capped-weight imbalance follows the binomial prediction") {
    for (int n = 2; n <= 12; ++n) {
        for (int d = 0; d <= n; ++d) {
            const BitSeq s = max_weight_db(n, d);
            const std::int64_t zeros = std::int64_t(s.size() - s.count_ones());
            const std::int64_t ones = std::int64_t(s.count_ones());
            const std::int64_t expect = d == 0 ? 0 : binomial_imbalance(n, n - d);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(zeros - ones == expect);
        }
    }
}

TEST_CASE("order-10 discrepancies of the concatenations") {
    CHECK(disc_linear(ccr2(10)).discrepancy == 13);
    CHECK(disc_linear(ccr3(10)).discrepancy == 13);
    CHECK(disc_linear(weight_range_db(10)).discrepancy == 131);
}
