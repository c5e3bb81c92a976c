#include "debruijn/discrepancy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace debruijn {

std::vector<std::int64_t> prefix_profile(const BitSeq& seq) {
    std::vector<std::int64_t> out;
    out.reserve(seq.size() + 1);
    std::int64_t j = 0;
    out.push_back(0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        j += seq.bit(i) ? 1 : -1;
        out.push_back(j);
    }
    return out;
}

std::int64_t disc_oracle(const BitSeq& seq) {
    const std::size_t m = seq.size();
    std::int64_t best = 0;
    for (std::size_t start = 0; start < m; ++start) {
        std::int64_t j = 0;
        for (std::size_t k = 0; k < m; ++k) {
            j += seq.bit(start + k) ? 1 : -1;
            best = std::max(best, j < 0 ? -j : j);
        }
    }
    return best;
}

DiscrepancyReport disc_linear(const BitSeq& seq) {
    const std::size_t ones = seq.count_ones();
    if (ones * 2 != seq.size())
        throw std::invalid_argument("disc_linear requires a balanced sequence; use disc_general");
    DiscrepancyReport rep;
    std::int64_t j = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        j += seq.bit(i) ? 1 : -1;
        rep.d1 = std::max(rep.d1, j);
        rep.d0 = std::max(rep.d0, -j);
    }
    rep.discrepancy = rep.d0 + rep.d1;
    return rep;
}

std::int64_t disc_general(const BitSeq& seq) {
    const std::size_t m = seq.size();
    if (m == 0) return 0;
    // prefix sums of the doubled sequence, s_0..s_2m
    std::vector<std::int64_t> ps(2 * m + 1, 0);
    for (std::size_t i = 0; i < 2 * m; ++i)
        ps[i + 1] = ps[i] + (seq.bit(i) ? 1 : -1);
    std::int64_t best = 0;
    std::deque<std::size_t> lo, hi;  // index windows over ps, values increasing / decreasing
    for (std::size_t j = 1; j <= 2 * m; ++j) {
        const std::size_t i = j - 1;  // admit s_{j-1}; window of valid i is [j-m, j-1]
        while (!lo.empty() && ps[lo.back()] >= ps[i]) lo.pop_back();
        lo.push_back(i);
        while (!hi.empty() && ps[hi.back()] <= ps[i]) hi.pop_back();
        hi.push_back(i);
        while (lo.front() + m < j) lo.pop_front();
        while (hi.front() + m < j) hi.pop_front();
        best = std::max({best, ps[j] - ps[lo.front()], ps[hi.front()] - ps[j]});
    }
    return best;
}

std::string profile_csv(const BitSeq& seq) {
    std::string out = "index,diff\n";
    std::int64_t j = 0;
    out += "0,0\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        j += seq.bit(i) ? 1 : -1;
        out += std::to_string(i + 1);
        out += ',';
        out += std::to_string(j);
        out += '\n';
    }
    return out;
}

}  // namespace debruijn
