// Greedy de Bruijn generators driven by a 2^n-bit visited-window set.
#pragma once

#include "debruijn/bitseq.hpp"

namespace debruijn {

// Hard memory cap for the visited set (2^26 bits = 8 MiB).
inline constexpr int kGreedyMaxOrder = 26;

// Seed 0^n, append 1 whenever the new n-window is unvisited, else 0; the
// emitted tail plus the seed (seed rotated to the end) is the output, which
// therefore starts with 1^n. Requires 1 <= n <= kGreedyMaxOrder.
BitSeq prefer_one(int n);

// Seed 1^n; append the bit equal to the last one whenever the new window is
// unvisited, else the complement — except that windows consisting of an
// alternating prefix ending in 0 followed by two or more 1s are never entered
// while any other unvisited window is available (a plain greedy dead-ends on
// them; the skipped windows are exactly the ones the wrap-around supplies).
// The first 2^n bits of the linear run form the cycle. 2 <= n <= kGreedyMaxOrder.
BitSeq prefer_same(int n);

// Seed 0^n; append the complement of the last bit whenever that window is
// unvisited, else repeat the last bit — except from window 01^{n-1}, where a 1
// is appended (otherwise 1^n is never reached). The cycle is linearized
// starting from the alternating window 0101... — the canonical rotation, since
// d1/d0 depend on the starting point. 2 <= n <= kGreedyMaxOrder.
BitSeq prefer_opposite(int n);

}  // namespace debruijn
