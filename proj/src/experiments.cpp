#include "debruijn/experiments.hpp"

#include <random>
#include <stdexcept>

#include "debruijn/bitseq.hpp"
#include "debruijn/constructions.hpp"
#include "debruijn/discrepancy.hpp"
#include "debruijn/greedy.hpp"

namespace debruijn {

namespace {

BitSeq build(const std::string& id, int n) {
    if (id == "ccr2") return ccr2(n);
    if (id == "ccr3") return ccr3(n);
    if (id == "pref-same") return prefer_same(n);
    if (id == "pref-opposite") return prefer_opposite(n);
    if (id == "prefer-1") return prefer_one(n);
    if (id == "weight-range") return weight_range_db(n);
    throw std::invalid_argument("unknown construction: " + id);
}

std::int64_t quarter_squares(int n) {
    const std::int64_t a = n - 4, b = n - 2;
    return a * a / 4 + b * b / 4 + 2;
}

// partial sums of the series expanded from x(1+x^4)/((1-x)^2(1-x^4))
std::int64_t a008811_prefix(int m) {
    if (m < 0) return 0;
    std::int64_t total = 0;
    for (int j = 0; 4 * j <= m; ++j) total += m - 4 * j + 1;
    return total;
}

std::int64_t a008811_prediction(int n) {
    return a008811_prefix(n - 2) + a008811_prefix(n - 6);
}

bool has_closing_pattern(const BitSeq& po, int n) {
    const int j = (n + 2) / 3;
    std::string suffix;
    for (int t = j; t >= 1; --t)
        suffix += std::string(std::size_t(t), '0') + std::string(std::size_t(n - t), '1');
    suffix += '1' + std::string(std::size_t(n - 1), '0');
    const std::string s = po.to_string();
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

const std::vector<std::string>& table1_constructions() {
    static const std::vector<std::string> ids = {"ccr2",     "ccr3",     "pref-same",
                                                 "pref-opposite", "prefer-1", "weight-range"};
    return ids;
}

std::vector<TableRow> table1(int n_min, int n_max, const std::vector<std::string>& constructions) {
    std::vector<TableRow> rows;
    for (const auto& id : constructions) {
        for (int n = n_min; n <= n_max; ++n) {
            const BitSeq seq = build(id, n);
            const DiscrepancyReport rep = disc_linear(seq);
            rows.push_back(TableRow{id, n, rep.discrepancy, rep.d1, rep.d0});
        }
    }
    return rows;
}

double random_baseline(int n, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (n < 1 || n > 26) throw std::length_error("order outside supported range");
    std::mt19937_64 rng(seed);
    const std::size_t len = std::size_t(1) << n;
    std::int64_t total = 0;
    for (int s = 0; s < samples; ++s) {
        BitSeq seq(len);
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (i % 64 == 0) word = rng();
            seq.set_bit(i, (word >> (i % 64)) & 1);
        }
        total += disc_general(seq);
    }
    return double(total) / double(samples);
}

std::vector<ConjectureLine> conjecture_report(int n_min, int n_max) {
    std::vector<ConjectureLine> lines;
    for (int n = n_min; n <= n_max; ++n) {
        const BitSeq po = prefer_opposite(n);
        const auto po_rep = disc_linear(po);
        lines.push_back(ConjectureLine{"pref-opposite-quarter-squares", n, quarter_squares(n),
                                       po_rep.discrepancy, quarter_squares(n) == po_rep.discrepancy});
        const bool suffix = has_closing_pattern(po, n);
        lines.push_back(ConjectureLine{"pref-opposite-closing-pattern", n, 1, suffix ? 1 : 0, suffix});

        const auto ps_rep = disc_linear(prefer_same(n));
        lines.push_back(ConjectureLine{"pref-same-max-ones-a008811", n, a008811_prediction(n),
                                       ps_rep.d1, a008811_prediction(n) == ps_rep.d1});

        const std::int64_t bound = binomial_imbalance(n, n / 2) + n / 2;
        const auto wr = disc_linear(weight_range_db(n));
        lines.push_back(
            ConjectureLine{"weight-range-max-disc", n, bound, wr.discrepancy, bound == wr.discrepancy});
    }
    return lines;
}

std::string table1_csv(const std::vector<TableRow>& rows) {
    std::string out = "construction,n,discrepancy,d1,d0\n";
    for (const auto& r : rows)
        out += r.construction + ',' + std::to_string(r.n) + ',' + std::to_string(r.discrepancy) + ',' +
               std::to_string(r.d1) + ',' + std::to_string(r.d0) + '\n';
    return out;
}

std::string conjecture_csv(const std::vector<ConjectureLine>& lines) {
    std::string out = "name,n,predicted,measured,match\n";
    for (const auto& l : lines)
        out += l.name + ',' + std::to_string(l.n) + ',' + std::to_string(l.predicted) + ',' +
               std::to_string(l.measured) + ',' + (l.match ? "true" : "false") + '\n';
    return out;
}

}  // namespace debruijn
