// Discrepancy of circular binary sequences: quadratic reference oracle,
// linear-time method for balanced sequences, and a linear-time general method.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/bitseq.hpp"

namespace debruijn {

struct DiscrepancyReport {
    std::int64_t d1 = 0;           // max over prefixes of #1s - #0s
    std::int64_t d0 = 0;           // max over prefixes of #0s - #1s
    std::int64_t discrepancy = 0;  // d0 + d1 for balanced input
};

// Running sums j_0..j_len of (+1 per '1', -1 per '0'); j_0 = 0.
std::vector<std::int64_t> prefix_profile(const BitSeq& seq);

// Reference oracle: scans every rotation's prefixes; Theta(m^2). Tests only.
std::int64_t disc_oracle(const BitSeq& seq);

// Single pass, balanced sequences only (#1s == #0s); throws otherwise.
DiscrepancyReport disc_linear(const BitSeq& seq);

// Exact circular discrepancy of an arbitrary sequence in O(m): sliding-window
// extrema of the doubled prefix-sum array over pairs i < j <= i + m.
std::int64_t disc_general(const BitSeq& seq);

// CSV text "index,diff" header then one "i,j_i" row per index 0..len; LF lines.
std::string profile_csv(const BitSeq& seq);

}  // namespace debruijn
