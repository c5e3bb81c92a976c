// Concatenation-based de Bruijn constructions: co-necklace CCR2/CCR3,
// min/max-weight sequences, and the weight-range gluing.
#pragma once

#include <cstdint>

#include "debruijn/bitseq.hpp"

namespace debruijn {

// Concatenation of pr(alpha . complement(alpha)) over lex-least co-necklace
// representatives taken in colex order; discrepancy at most 2n.
BitSeq ccr2(int n);

// Same blocks over the 0-prefix-stripped representatives in lex order.
BitSeq ccr3(int n);

// Cyclic sequence containing every length-n string of weight >= d exactly
// once: concatenated periodic reductions of weight->=d necklaces in lex order.
BitSeq min_weight_db(int n, int d);

// Bitwise complement: every string of weight <= n-d exactly once.
BitSeq max_weight_db(int n, int d);

// The suffix 1^{d-1} moved to the front; requires that suffix to be all ones.
BitSeq rotate_suffix_ones(const BitSeq& seq, int d);

// max_weight_db(n, floor(n/2)+1) followed by
// rotate_suffix_ones(min_weight_db(n, ceil(n/2)), ceil(n/2)).
BitSeq weight_range_db(int n);

// C(n-1, d): predicted zeros-minus-ones of a max-weight sequence capped at
// weight d; exact integers, throws on overflow.
std::int64_t binomial_imbalance(int n, int d);

}  // namespace debruijn
