#include "debruijn/necklaces.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace debruijn {

std::string periodic_reduction(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("periodic_reduction of empty word");
    const std::size_t m = word.size();
    for (std::size_t p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < m && periodic; ++i)
            periodic = word[i] == word[i - p];
        if (periodic) return std::string(word.substr(0, p));
    }
    return std::string(word);  // unreachable; p = m always matches
}

namespace {

struct MinWeightGen {
    int n, d;
    std::vector<char> a;  // 1-indexed digits
    std::vector<NecklaceRep>* out;

    void emit(int p) {
        NecklaceRep rep;
        rep.word.assign(n, '0');
        for (int i = 1; i <= n; ++i) rep.word[i - 1] = char('0' + a[i]);
        rep.period = p;
        rep.weight = int(std::count(rep.word.begin(), rep.word.end(), '1'));
        out->push_back(std::move(rep));
    }

    // pre-necklace recursion; w = ones placed so far, p = current period
    void gen(int t, int p, int w) {
        if (t > n) {
            if (n % p == 0) emit(p);
            return;
        }
        a[t] = 0;
        if (a[t - p] == 0 && d - w <= n - t)  // enough positions left to reach weight d
            gen(t + 1, p, w);
        a[t] = 1;
        if (a[t - p] == 1)
            gen(t + 1, p, w + 1);
        else
            gen(t + 1, t, w + 1);
    }
};

}  // namespace

std::vector<NecklaceRep> necklaces_lex_minweight(int n, int d) {
    if (n < 1) throw std::invalid_argument("necklace length must be positive");
    if (d < 0 || d > n) throw std::invalid_argument("weight bound out of range");
    std::vector<NecklaceRep> out;
    MinWeightGen g{n, d, std::vector<char>(std::size_t(n) + 1, 0), &out};
    g.gen(1, 1, 0);
    return out;
}

std::string rep_ccr3(std::string_view rep_lex) {
    std::size_t j = 0;
    while (j < rep_lex.size() && rep_lex[j] == '0') ++j;
    std::string out(rep_lex.substr(j));
    out.append(j, '1');
    return out;
}

std::vector<CoNecklaceClass> conecklace_classes(int n) {
    if (n < 1 || n >= 31) throw std::invalid_argument("order out of range");
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<CoNecklaceClass> out;
    auto to_string = [n](std::uint32_t v) {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1u) s[i] = '1';
        return s;
    };
    for (std::uint32_t v = 0; v < total; ++v) {
        if (visited[v]) continue;
        CoNecklaceClass cls;
        std::uint32_t cur = v;
        while (!visited[cur]) {
            visited[cur] = true;
            cls.members.push_back(to_string(cur));
            const std::uint32_t a1 = (cur >> (n - 1)) & 1u;
            cur = ((cur << 1) & (total - 1)) | (1u ^ a1);
        }
        // ascending scan guarantees v is the smallest member of its orbit
        cls.rep_lex = cls.members.front();
        cls.rep_ccr3 = rep_ccr3(cls.rep_lex);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::string> colex_sort(std::vector<std::string> words) {
    for (const auto& w : words)
        if (w.size() != words.front().size())
            throw std::invalid_argument("colex_sort requires equal-length words");
    std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return words;
}

}  // namespace debruijn
