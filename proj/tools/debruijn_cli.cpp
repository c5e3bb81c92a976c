// Command-line frontend: generation, discrepancy, profiles, table
// reproduction, validation, and the LFSR sweep. Data on stdout,
// diagnostics on stderr; usage errors exit 2, capacity/precondition
// violations exit 1.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "debruijn/bitseq.hpp"
#include "debruijn/constructions.hpp"
#include "debruijn/discrepancy.hpp"
#include "debruijn/experiments.hpp"
#include "debruijn/greedy.hpp"
#include "debruijn/lfsr.hpp"

namespace {

using namespace debruijn;

int max_order_cap() {
    int cap = kGreedyMaxOrder;
    if (const char* env = std::getenv("DEBRUIJN_MAX_N")) {
        try {
            cap = std::min(cap, std::stoi(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("DEBRUIJN_MAX_N is not an integer");
        }
    }
    return cap;
}

void check_cap(int n) {
    const int cap = max_order_cap();
    if (n > cap)
        throw std::length_error("order " + std::to_string(n) + " exceeds capacity cap " +
                                std::to_string(cap));
}

BitSeq build_named(const std::string& id, int n, int d, bool d_given) {
    check_cap(n);
    if (id == "min-weight" || id == "max-weight") {
        if (!d_given) throw CLI::ValidationError("--construction", id + " requires --d");
        return id == "min-weight" ? min_weight_db(n, d) : max_weight_db(n, d);
    }
    if (d_given) throw CLI::ValidationError("--d", "applies only to min-weight/max-weight");
    if (id == "ccr2") return ccr2(n);
    if (id == "ccr3") return ccr3(n);
    if (id == "pref-same") return prefer_same(n);
    if (id == "pref-opposite") return prefer_opposite(n);
    if (id == "prefer-1") return prefer_one(n);
    if (id == "weight-range") return weight_range_db(n);
    throw CLI::ValidationError("--construction", "unknown construction: " + id);
}

BitSeq read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return BitSeq::from_string(buf.str());
}

void print_disc(const BitSeq& seq) {
    // d1/d0 are the prefix extremes of this linearization; disc is circular
    const auto profile_d1 = [&] {
        std::int64_t j = 0, mx = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            j += seq.bit(i) ? 1 : -1;
            mx = std::max(mx, j);
        }
        return mx;
    }();
    const auto profile_d0 = [&] {
        std::int64_t j = 0, mn = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            j += seq.bit(i) ? 1 : -1;
            mn = std::min(mn, j);
        }
        return -mn;
    }();
    std::cout << "disc=" << disc_general(seq) << " d1=" << profile_d1 << " d0=" << profile_d0
              << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"binary de Bruijn sequence construction and discrepancy toolkit"};
    app.require_subcommand(1);

    std::string construction, input_path, out_path, poly_text;
    int n = 0, d = 0;
    int n_min = 10, n_max = 16, which = 1;
    bool want_sweep = false, want_db = false;

    auto* g = app.add_subcommand("generate", "emit a constructed sequence");
    g->add_option("--construction", construction, "construction id")->required();
    g->add_option("--n", n, "order")->required();
    auto* g_d = g->add_option("--d", d, "weight bound for min-weight/max-weight");

    auto* di = app.add_subcommand("disc", "discrepancy of a construction or input file");
    di->add_option("--n", n, "order")->required();
    di->add_option("--construction", construction, "construction id");
    di->add_option("--input", input_path, "bit-string file");
    auto* di_d = di->add_option("--d", d, "weight bound for min-weight/max-weight");

    auto* pr = app.add_subcommand("profile", "prefix-sum profile CSV of a construction");
    pr->add_option("--construction", construction, "construction id")->required();
    pr->add_option("--n", n, "order")->required();
    pr->add_option("--out", out_path, "output CSV path")->required();
    auto* pr_d = pr->add_option("--d", d, "weight bound for min-weight/max-weight");

    auto* ta = app.add_subcommand("table", "recompute a reference table as CSV");
    ta->add_option("--which", which, "1 = constructions, 2 = LFSR sweep")->required();
    ta->add_option("--n-min", n_min, "first order");
    ta->add_option("--n-max", n_max, "last order");

    auto* va = app.add_subcommand("validate", "de Bruijn + run-statistics check of a file");
    va->add_option("--n", n, "order")->required();
    va->add_option("--input", input_path, "bit-string file")->required();

    auto* lf = app.add_subcommand("lfsr", "m-sequence generation or primitive-polynomial sweep");
    lf->add_option("--n", n, "register width")->required();
    lf->add_option("--poly", poly_text, "polynomial, e.g. 1+x^2+x^5 or 0x25");
    lf->add_flag("--sweep", want_sweep, "sweep all primitive polynomials");
    lf->add_flag("--debruijn", want_db, "extend the m-sequence with the extra 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    if (g->parsed()) {
        std::cout << build_named(construction, n, d, g_d->count() > 0).to_string() << "\n";
        return 0;
    }

    if (di->parsed()) {
        if (construction.empty() == input_path.empty())
            throw CLI::ValidationError("disc", "need exactly one of --construction / --input");
        const BitSeq seq = construction.empty()
                               ? read_input_file(input_path)
                               : build_named(construction, n, d, di_d->count() > 0);
        print_disc(seq);
        return 0;
    }

    if (pr->parsed()) {
        const BitSeq seq = build_named(construction, n, d, pr_d->count() > 0);
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << profile_csv(seq);
        return 0;
    }

    if (ta->parsed()) {
        if (which == 1) {
            for (int i = n_min; i <= n_max; ++i) check_cap(i);
            std::cout << table1_csv(table1(n_min, n_max, table1_constructions()));
        } else if (which == 2) {
            std::cout << "n,count,min,mean,max\n";
            for (int i = n_min; i <= n_max; ++i) {
                check_cap(i);
                const SweepStats st = sweep(i);
                char mean[32];
                std::snprintf(mean, sizeof mean, "%.2f", st.mean());
                std::cout << st.n << ',' << st.count << ',' << st.min_disc << ',' << mean << ','
                          << st.max_disc << "\n";
            }
        } else {
            throw CLI::ValidationError("table", "--which must be 1 or 2");
        }
        return 0;
    }

    if (va->parsed()) {
        check_cap(n);
        const BitSeq seq = read_input_file(input_path);
        const bool db = is_de_bruijn(seq, n);
        std::cout << "de_bruijn=" << (db ? "true" : "false") << "\n";
        if (!db) return 1;
        const GolombStats st = golomb_stats(seq);
        const bool balanced = st.ones == st.zeros;
        const bool runs_expected = n < 2 || (st.one_runs == st.zero_runs &&
                                             st.one_runs == (std::uint64_t{1} << (n - 2)));
        std::cout << "ones=" << st.ones << " zeros=" << st.zeros << " one_runs=" << st.one_runs
                  << " zero_runs=" << st.zero_runs << "\n";
        std::cout << "balanced=" << (balanced ? "true" : "false")
                  << " runs_expected=" << (runs_expected ? "true" : "false") << "\n";
        return balanced && runs_expected ? 0 : 1;
    }

    if (lf->parsed()) {
        check_cap(n);
        if (want_sweep != poly_text.empty())
            throw CLI::ValidationError("lfsr", "need exactly one of --poly / --sweep");
        if (want_sweep) {
            const SweepStats st = sweep(n);
            char mean[32];
            std::snprintf(mean, sizeof mean, "%.2f", st.mean());
            std::cout << "n,count,min,mean,max\n"
                      << st.n << ',' << st.count << ',' << st.min_disc << ',' << mean << ','
                      << st.max_disc << "\n";
            return 0;
        }
        const Poly2 p = parse_poly(poly_text);
        if (p.degree != n)
            throw std::invalid_argument("polynomial degree " + std::to_string(p.degree) +
                                        " does not match --n " + std::to_string(n));
        if (!is_primitive(p))
            throw std::invalid_argument("polynomial " + format_poly(p) + " is not primitive");
        BitSeq seed{std::size_t(n)};
        seed.set_bit(std::size_t(n) - 1, true);
        const BitSeq m = lfsr_m_sequence(taps_from_poly(p), seed);
        std::cout << (want_db ? m_to_debruijn(m, n) : m).to_string() << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        // post-parse option-combination errors are usage errors too
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
