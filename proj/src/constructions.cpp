#include "debruijn/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "debruijn/necklaces.hpp"

namespace debruijn {

namespace {

std::string complement_str(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
}

// Block for one co-necklace class: pr(alpha . complement(alpha)). Each block
// must be balanced with discrepancy at most n; the concatenation of such
// blocks then has discrepancy at most 2n.
std::string conecklace_block(const std::string& alpha, int n) {
    std::string block = periodic_reduction(alpha + complement_str(alpha));
    long ones = 0, j = 0, mx = 0, mn = 0;
    for (char c : block) {
        ones += c == '1';
        j += c == '1' ? 1 : -1;
        mx = std::max(mx, j);
        mn = std::min(mn, j);
    }
    if (ones * 2 != long(block.size()) || mx - mn > n)
        throw std::logic_error("co-necklace block violates the balance/discrepancy bound");
    return block;
}

BitSeq concat_blocks(const std::vector<std::string>& reps, int n) {
    std::string out;
    for (const auto& alpha : reps)
        out += conecklace_block(alpha, n);
    return BitSeq::from_string(out);
}

}  // namespace

BitSeq ccr2(int n) {
    std::vector<std::string> reps;
    for (const auto& cls : conecklace_classes(n))
        reps.push_back(cls.rep_lex);
    return concat_blocks(colex_sort(std::move(reps)), n);
}

BitSeq ccr3(int n) {
    std::vector<std::string> reps;
    for (const auto& cls : conecklace_classes(n))
        reps.push_back(cls.rep_ccr3);
    std::sort(reps.begin(), reps.end());
    return concat_blocks(reps, n);
}

BitSeq min_weight_db(int n, int d) {
    std::string out;
    for (const auto& rep : necklaces_lex_minweight(n, d))
        out.append(rep.word, 0, std::size_t(rep.period));
    return BitSeq::from_string(out);
}

BitSeq max_weight_db(int n, int d) {
    return min_weight_db(n, d).complement();
}

BitSeq rotate_suffix_ones(const BitSeq& seq, int d) {
    if (d < 1) throw std::invalid_argument("weight must be at least 1");
    const std::size_t k = std::size_t(d) - 1;
    if (k > seq.size()) throw std::invalid_argument("suffix longer than sequence");
    for (std::size_t i = seq.size() - k; i < seq.size(); ++i)
        if (!seq.bit(i)) throw std::invalid_argument("suffix to rotate is not all ones");
    return seq.rotate(seq.size() - k);
}

BitSeq weight_range_db(int n) {
    if (n < 2) throw std::invalid_argument("order must be at least 2");
    const int d = n / 2 + 1;
    const int d_prime = (n + 1) / 2;
    const BitSeq high = max_weight_db(n, d);
    const BitSeq low = rotate_suffix_ones(min_weight_db(n, d_prime), d_prime);
    BitSeq out(high.size() + low.size());
    for (std::size_t i = 0; i < high.size(); ++i) out.set_bit(i, high.bit(i));
    for (std::size_t i = 0; i < low.size(); ++i) out.set_bit(high.size() + i, low.bit(i));
    return out;
}

std::int64_t binomial_imbalance(int n, int d) {
    if (n < 1 || d < 0 || d > n - 1) throw std::invalid_argument("binomial arguments out of range");
    if (n > 64) throw std::overflow_error("binomial beyond representable range");
    // Pascal recurrence, exact integers
    std::vector<std::int64_t> row(std::size_t(n), 0);
    row[0] = 1;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = std::min(i, n - 1); j >= 1; --j)
            row[std::size_t(j)] += row[std::size_t(j) - 1];
    return row[std::size_t(d)];
}

}  // namespace debruijn
