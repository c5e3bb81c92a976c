// Regenerates the reference discrepancy tables and conjecture reports from
// the construction and analysis modules; hosts the random baseline.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace debruijn {

struct TableRow {
    std::string construction;
    int n = 0;
    std::int64_t discrepancy = 0;
    std::int64_t d1 = 0;
    std::int64_t d0 = 0;
};

// Known ids: ccr2, ccr3, pref-same, pref-opposite, prefer-1, weight-range.
// Rows ordered by (construction as given, n); every value recomputed.
std::vector<TableRow> table1(int n_min, int n_max, const std::vector<std::string>& constructions);

const std::vector<std::string>& table1_constructions();

// Mean circular discrepancy of `samples` uniform random length-2^n strings;
// deterministic for a fixed seed.
double random_baseline(int n, int samples, std::uint64_t seed);

struct ConjectureLine {
    std::string name;
    int n = 0;
    std::int64_t predicted = 0;
    std::int64_t measured = 0;
    bool match = false;
};

// Status report, never a theorem claim: quarter-squares discrepancy formula
// and closing-pattern presence for prefer-opposite, the shifted-A008811
// prediction for prefer-same max-ones, and the weight-range discrepancy
// equality.
std::vector<ConjectureLine> conjecture_report(int n_min, int n_max);

// "construction,n,discrepancy,d1,d0" CSV.
std::string table1_csv(const std::vector<TableRow>& rows);

// "name,n,predicted,measured,match" CSV.
std::string conjecture_csv(const std::vector<ConjectureLine>& lines);

}  // namespace debruijn
