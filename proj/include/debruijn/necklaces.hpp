// Necklace and co-necklace machinery: periodic reduction, weight-constrained
// necklace enumeration in lexicographic order, CCR orbit classes.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace debruijn {

struct NecklaceRep {
    std::string word;  // lexicographically smallest rotation, length n
    int period = 0;    // p dividing n; word = prefix(p) repeated n/p times
    int weight = 0;    // count of 1s in word
};

// Shortest beta with word = beta^j.
std::string periodic_reduction(std::string_view word);

// All necklaces of length n and weight >= d, in lexicographic order of the
// full n-length word; recursive pre-necklace generation with a
// weight-feasibility prune.
std::vector<NecklaceRep> necklaces_lex_minweight(int n, int d);

// Orbit of the map a_1..a_n -> a_2..a_n (1 xor a_1).
struct CoNecklaceClass {
    std::vector<std::string> members;  // the orbit, in application order from rep_lex
    std::string rep_lex;               // lexicographically smallest member
    std::string rep_ccr3;              // rep_lex with maximal 0^j prefix moved to 1^j suffix
};

// Partition of all n-bit strings into co-necklace classes, ordered by rep_lex.
std::vector<CoNecklaceClass> conecklace_classes(int n);

// Strips the maximal 0^j prefix and appends 1^j.
std::string rep_ccr3(std::string_view rep_lex);

// Sort by reversed-string lexicographic comparison; words must share a length.
std::vector<std::string> colex_sort(std::vector<std::string> words);

}  // namespace debruijn
