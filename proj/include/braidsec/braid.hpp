// Braid words in the Artin generators, pure-braid bookkeeping and an exact
// word-problem solver driven by the curve-coordinate action.
//
// Words are read in functional order: the rightmost letter acts first. All
// strand tracking below walks the word from right to left accordingly.
#pragma once

#include "braidsec/dynnikov.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidsec {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) { validate(); }

    void validate() const {
        if (strands < 1) throw std::invalid_argument("strand count must be positive");
        for (int v : letters)
            if (v == 0 || std::abs(v) > strands - 1)
                throw std::invalid_argument("letter " + std::to_string(v) + " out of range for " +
                                            std::to_string(strands) + " strands");
    }
    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;  // literal equality
};

inline std::string letters_to_string(const std::vector<int>& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(w[k]);
    }
    return out;
}

inline std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter '" + tok + "'");
        }
        if (used != tok.size() || v == 0) throw std::invalid_argument("bad braid letter '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// "n=<strands>; l1 l2 ..." ; the empty word serializes as "n=<strands>;".
inline std::string to_text(const BraidWord& u) {
    std::string s = "n=" + std::to_string(u.strands) + ";";
    if (!u.letters.empty()) s += " " + letters_to_string(u.letters);
    return s;
}

inline BraidWord parse_braid(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("braid text needs an 'n=<k>;' header");
    std::string head = text.substr(0, semi);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head.rfind("n=", 0) != 0) throw std::invalid_argument("braid text needs an 'n=<k>;' header");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(head.substr(2), &used);
        if (used != head.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad strand count in '" + head + "'");
    }
    return BraidWord(n, parse_letters(text.substr(semi + 1)));
}

inline void require_same_strands(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw std::invalid_argument("strand-count mismatch");
}

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
    require_same_strands(u, v);
    BraidWord w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

inline BraidWord inverse(const BraidWord& u) {
    BraidWord w;
    w.strands = u.strands;
    w.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

inline BraidWord power(const BraidWord& u, long k) {
    BraidWord base = k < 0 ? inverse(u) : u;
    BraidWord w;
    w.strands = u.strands;
    for (long t = 0; t < std::labs(k); ++t) w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
    return w;
}

struct Permutation {
    std::vector<int> image;  // image[i-1] = where i goes, 1-based values

    static Permutation identity(int n) {
        Permutation p;
        p.image.resize(n);
        std::iota(p.image.begin(), p.image.end(), 1);
        return p;
    }
    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image.at(i - 1); }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image[i] != i + 1) return false;
        return true;
    }
    // (p * q)(i) = p(q(i))
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        Permutation r;
        r.image.resize(q.image.size());
        for (int i = 1; i <= q.size(); ++i) r.image[i - 1] = p(q(i));
        return r;
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Product of the transpositions (|v|, |v|+1), leftmost factor outermost.
inline Permutation permutation_of(const BraidWord& u) {
    Permutation p = Permutation::identity(u.strands);
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
        const int i = std::abs(*it);
        for (int& x : p.image) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
    }
    return p;
}

inline bool is_pure(const BraidWord& u) { return permutation_of(u).is_identity(); }

struct LinkingMatrix {
    int n = 0;
    std::vector<long> entries;  // row-major n x n

    explicit LinkingMatrix(int size = 0) : n(size), entries(static_cast<std::size_t>(size) * size, 0) {}
    long& at(int i, int j) { return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    long at(int i, int j) const { return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    bool is_zero() const {
        return std::all_of(entries.begin(), entries.end(), [](long v) { return v == 0; });
    }
    friend LinkingMatrix operator+(LinkingMatrix x, const LinkingMatrix& y) {
        for (std::size_t k = 0; k < x.entries.size(); ++k) x.entries[k] += y.entries.at(k);
        return x;
    }
    friend LinkingMatrix operator-(LinkingMatrix x) {
        for (auto& v : x.entries) v = -v;
        return x;
    }
    friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

// Signed crossing count per strand pair, before halving. Works for any word.
inline LinkingMatrix crossing_matrix(const BraidWord& u) {
    const int n = u.strands;
    LinkingMatrix m(n);
    std::vector<int> at_pos(n + 1);
    std::iota(at_pos.begin(), at_pos.end(), 0);
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
        const int i = std::abs(*it);
        const int s = *it > 0 ? 1 : -1;
        const int x = at_pos[i], y = at_pos[i + 1];
        m.at(x, y) += s;
        m.at(y, x) += s;
        std::swap(at_pos[i], at_pos[i + 1]);
    }
    return m;
}

inline LinkingMatrix linking_matrix(const BraidWord& u) {
    if (!is_pure(u)) throw std::invalid_argument("linking matrix needs a pure braid");
    LinkingMatrix m = crossing_matrix(u);
    for (auto& v : m.entries) v /= 2;  // every pair crosses an even number of times
    return m;
}

inline BraidWord forget_strand(const BraidWord& u, int t) {
    if (t < 1 || t > u.strands) throw std::out_of_range("strand index out of range");
    if (!is_pure(u)) throw std::invalid_argument("forget_strand needs a pure braid");
    if (u.strands == 1) throw std::invalid_argument("cannot forget the only strand");
    std::vector<int> kept;
    int p = t;
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
        const int i = std::abs(*it);
        const int s = *it > 0 ? 1 : -1;
        if (i == p) p = i + 1;
        else if (i + 1 == p) p = i;
        else if (i + 1 < p) kept.push_back(s * i);
        else kept.push_back(s * (i - 1));
    }
    std::reverse(kept.begin(), kept.end());
    return BraidWord(u.strands - 1, std::move(kept));
}

// Full twist on the contiguous strands i..j: (sigma_i ... sigma_{j-1})^{j-i+1}.
inline std::vector<int> full_twist_letters(int i, int j) {
    std::vector<int> w;
    for (int r = 0; r < j - i + 1; ++r)
        for (int k = i; k < j; ++k) w.push_back(k);
    return w;
}

// A braid v and a contiguous block lo..hi such that v carries the round curve
// around lo..hi onto the round curve around S. Members are slid leftwards
// one step at a time, each time passing below the non-member they overtake.
struct SortingBraid {
    std::vector<int> letters;
    int lo = 0, hi = 0;
};

inline SortingBraid sorting_braid(std::vector<int> S) {
    std::sort(S.begin(), S.end());
    SortingBraid out;
    for (;;) {
        int pick = 0;
        for (int s : S)
            if (s - 1 > S.front() && !std::binary_search(S.begin(), S.end(), s - 1)) pick = std::max(pick, s);
        if (pick == 0) break;
        out.letters.push_back(-(pick - 1));
        *std::find(S.begin(), S.end(), pick) = pick - 1;
        std::sort(S.begin(), S.end());
    }
    out.lo = S.front();
    out.hi = S.back();
    return out;
}

// Twist about the round curve around S as letters: v * full twist * v^{-1}.
inline std::vector<int> round_twist_letters(const std::vector<int>& S) {
    SortingBraid sb = sorting_braid(S);
    std::vector<int> w = sb.letters;
    auto full = full_twist_letters(sb.lo, sb.hi);
    w.insert(w.end(), full.begin(), full.end());
    for (auto it = sb.letters.rbegin(); it != sb.letters.rend(); ++it) w.push_back(-*it);
    return w;
}

inline BraidWord artin_generator(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("need 1 <= i < j <= n");
    return BraidWord(n, round_twist_letters({i, j}));
}

namespace detail {
// Test curves on the disk with one extra puncture n+1 that no strand of B_n
// ever crosses. Their joint stabilizer in B_n is trivial.
inline const std::vector<dyn::Coords>& probe_curves(int n) {
    thread_local std::vector<std::vector<dyn::Coords>> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    auto& probes = cache[n];
    if (probes.empty()) {
        const int m = n + 1;
        for (int i = 1; i <= n; ++i) probes.push_back(dyn::round_coords(m, {i, i + 1}));
        for (int k = 3; k <= n; ++k) {
            std::vector<int> S(k);
            std::iota(S.begin(), S.end(), 1);
            probes.push_back(dyn::round_coords(m, S));
        }
    }
    return probes;
}
}  // namespace detail

inline bool is_identity(const BraidWord& u) {
    u.validate();
    if (u.strands <= 1 || u.letters.empty()) return true;
    if (!is_pure(u)) return false;
    if (!crossing_matrix(u).is_zero()) return false;
    for (const auto& c : detail::probe_curves(u.strands))
        if (dyn::act(u.letters, c) != c) return false;
    return true;
}

inline bool equals(const BraidWord& u, const BraidWord& v) {
    require_same_strands(u, v);
    return is_identity(compose(u, inverse(v)));
}

inline bool commute(const BraidWord& u, const BraidWord& v) { return equals(compose(u, v), compose(v, u)); }

}  // namespace braidsec
