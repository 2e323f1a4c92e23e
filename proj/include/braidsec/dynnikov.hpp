// Piecewise-linear curve coordinates on the m-punctured disk and the braid
// action on them. Punctures sit on the horizontal axis at positions 1..m.
//
// A multicurve in minimal position with the axis is recorded by the pairs
// (a_p, b_p) for the interior punctures p = 2..m-1, stored 0-based.
// a_p is half the difference between the crossings of the vertical ray
// below p and the ray above p; b_p is half the drop in crossings of the
// full vertical lines just left and just right of p.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidsec::dyn {

using Int = mpz_class;

struct Coords {
    std::vector<Int> a;
    std::vector<Int> b;

    int punctures() const { return static_cast<int>(a.size()) + 2; }
    bool is_zero() const {
        auto z = [](const Int& x) { return x == 0; };
        return std::all_of(a.begin(), a.end(), z) && std::all_of(b.begin(), b.end(), z);
    }
    friend bool operator==(const Coords&, const Coords&) = default;
};

inline Int pos(const Int& x) { return x > 0 ? x : Int(0); }
inline Int neg(const Int& x) { return x < 0 ? x : Int(0); }

inline Coords zero_coords(int m) {
    if (m < 3) throw std::invalid_argument("coordinates need at least 3 punctures");
    Coords c;
    c.a.assign(static_cast<std::size_t>(m - 2), Int(0));
    c.b.assign(static_cast<std::size_t>(m - 2), Int(0));
    return c;
}

// Single generator sigma_|letter|^{sign(letter)}, updated in place.
inline void apply_letter(Coords& c, int letter) {
    const int m = c.punctures();
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i > m - 1) throw std::out_of_range("generator index out of range");
    auto& a = c.a;
    auto& b = c.b;
    if (i == 1) {
        Int a0 = a[0], b0 = b[0];
        if (letter > 0) {
            b[0] = a0 + pos(b0);
            a[0] = -b0 + pos(b[0]);
        } else {
            b[0] = -a0 + pos(b0);
            a[0] = b0 - pos(b[0]);
        }
        return;
    }
    if (i == m - 1) {
        const std::size_t k = static_cast<std::size_t>(m - 3);
        Int ak = a[k], bk = b[k];
        if (letter > 0) {
            b[k] = ak + neg(bk);
            a[k] = -bk + neg(b[k]);
        } else {
            b[k] = -ak + neg(bk);
            a[k] = bk - neg(b[k]);
        }
        return;
    }
    // Interior generator: acts on the pairs of punctures i and i+1.
    const std::size_t p = static_cast<std::size_t>(i - 2);
    const Int x1 = a[p], y1 = b[p], x2 = a[p + 1], y2 = b[p + 1];
    if (letter < 0) {
        Int z = x1 - neg(y1) - x2 + pos(y2);
        a[p] = x1 + pos(y1) + pos(pos(y2) - z);
        b[p] = y2 - pos(z);
        a[p + 1] = x2 + neg(y2) + neg(neg(y1) + z);
        b[p + 1] = y1 + pos(z);
    } else {
        Int z = x1 + neg(y1) - x2 - pos(y2);
        a[p] = x1 - pos(y1) - pos(pos(y2) + z);
        b[p] = y2 + neg(z);
        a[p + 1] = x2 - neg(y2) - neg(neg(y1) - z);
        b[p + 1] = y1 - neg(z);
    }
}

// Functional order: the last letter acts first.
inline Coords act(const std::vector<int>& letters, Coords c) {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) apply_letter(c, *it);
    return c;
}

// Coordinates of the boundary of a neighborhood of the low segment joining
// the punctures of S together with vertical arms up to each member. S must
// be sorted, 1-based, with 2 <= |S| <= m.
inline Coords round_coords(int m, const std::vector<int>& S) {
    Coords c = zero_coords(m);
    if (static_cast<int>(S.size()) == m) return c;
    const int lo = S.front(), hi = S.back();
    auto member = [&](int p) { return std::binary_search(S.begin(), S.end(), p); };
    std::vector<Int> beta(static_cast<std::size_t>(m), Int(0));
    for (int p = 1; p < m; ++p) beta[p] = (lo <= p && p < hi) ? 2 : 0;
    for (int p = 2; p < m; ++p) {
        const bool in = member(p);
        const bool between = lo < p && p < hi && !in;
        Int up = in ? 1 : 0;
        Int down = in ? 1 : (between ? 2 : 0);
        c.a[p - 2] = (down - up) / 2;
        c.b[p - 2] = (beta[p - 1] - beta[p]) / 2;
    }
    return c;
}

// Crossing counts reconstructed from coordinates.
struct Crossings {
    std::vector<Int> beta;   // beta[p], p = 1..m-1: vertical line between p and p+1
    std::vector<Int> above;  // above[p], p = 2..m-1: vertical ray above p
    std::vector<Int> below;  // below[p]
    std::vector<Int> right;  // loops around p attached from the left
    std::vector<Int> left;   // loops around p attached from the right
};

inline Crossings crossings(const Coords& c) {
    const int m = c.punctures();
    Crossings x;
    x.beta.assign(m, Int(0));
    x.above.assign(m + 1, Int(0));
    x.below.assign(m + 1, Int(0));
    x.right.assign(m + 1, Int(0));
    x.left.assign(m + 1, Int(0));
    Int prefix = 0, best = 0;
    for (int k = 0; k < m - 2; ++k) {
        Int cand = abs(c.a[k]) + pos(c.b[k]) + prefix;
        if (cand > best) best = cand;
        prefix += c.b[k];
    }
    x.beta[1] = 2 * best;
    for (int p = 2; p < m; ++p) x.beta[p] = x.beta[p - 1] - 2 * c.b[p - 2];
    for (int p = 2; p < m; ++p) {
        const Int& bb = c.b[p - 2];
        x.right[p] = pos(bb);
        x.left[p] = pos(-bb);
        Int half = x.beta[p - 1] / 2;
        x.above[p] = half + x.left[p] - c.a[p - 2];
        x.below[p] = half + x.left[p] + c.a[p - 2];
    }
    return x;
}

// The axis is cut by the punctures into segments e_0 .. e_m (e_0 and e_m run
// out to the boundary). For each segment: number of crossing points, and for
// each half plane the number of arcs ending there from the left (closings)
// followed by arcs leaving to the right (openings), in left-to-right order.
struct AxisArcs {
    std::vector<Int> width;
    std::vector<std::pair<Int, Int>> upper;
    std::vector<std::pair<Int, Int>> lower;
};

inline AxisArcs axis_arcs(const Coords& c) {
    const int m = c.punctures();
    const Crossings x = crossings(c);
    auto A = [&](int p) -> Int { return p == m ? Int(x.beta[m - 1] / 2) : Int(x.above[p] - x.left[p]); };
    auto C = [&](int p) -> Int { return p == 1 ? Int(x.beta[1] / 2) : Int(x.above[p] - x.right[p]); };
    auto r = [&](int p) -> Int { return p == 1 ? Int(0) : x.right[p]; };
    auto l = [&](int p) -> Int { return p == m ? Int(0) : x.left[p]; };
    AxisArcs out;
    const Int first = x.beta[1] / 2, last = x.beta[m - 1] / 2;
    out.width.push_back(first);
    out.upper.emplace_back(Int(0), first);
    out.lower.emplace_back(Int(0), first);
    for (int p = 1; p < m; ++p) {
        Int d = A(p + 1) - C(p);
        out.upper.emplace_back(r(p) + pos(-d), l(p + 1) + pos(d));
        out.lower.emplace_back(r(p) + pos(d), l(p + 1) + pos(-d));
        out.width.push_back(r(p) + l(p + 1) + abs(d));
    }
    out.width.push_back(last);
    out.upper.emplace_back(last, Int(0));
    out.lower.emplace_back(last, Int(0));
    return out;
}

inline Int axis_weight(const Coords& c) {
    Int w = 0;
    for (const auto& v : axis_arcs(c).width) w += v;
    return w;
}

// A block of parallel arcs in one half plane: arc k (0 <= k < count) runs from
// position from_pos + count - 1 - k on segment from_seg to position
// to_pos + k on segment to_seg (from_seg < to_seg).
struct ArcRun {
    int from_seg;
    Int from_pos;
    int to_seg;
    Int to_pos;
    Int count;
};

inline std::vector<ArcRun> arc_runs(const std::vector<std::pair<Int, Int>>& seq) {
    struct Open { int seg; Int first; Int count; };
    std::vector<Open> stack;
    std::vector<ArcRun> out;
    for (int s = 0; s < static_cast<int>(seq.size()); ++s) {
        Int closing = seq[s].first;
        Int cursor = 0;
        while (closing > 0) {
            if (stack.empty()) throw std::logic_error("arc system does not close up");
            Open& top = stack.back();
            Int take = std::min(top.count, closing);
            out.push_back({top.seg, top.first + top.count - take, s, cursor, take});
            cursor += take;
            closing -= take;
            if (take == top.count) stack.pop_back();
            else top.count -= take;
        }
        if (seq[s].second > 0) stack.push_back({s, cursor, seq[s].second});
    }
    if (!stack.empty()) throw std::logic_error("arc system leaves open arcs");
    return out;
}

// Intersection number between the multicurve c and the relaxed curve that
// encloses punctures lo..hi (the boundary of a thin neighborhood of the axis
// interval between them). The relaxed curve crosses the axis once on e_{lo-1}
// and once on e_hi; sliding those two crossings along their segments removes
// every bigon, so the answer is a minimum over the two slide positions. The
// count is piecewise linear in the positions with kinks only at block
// boundaries and along diagonals coming from blocks joining the two end
// segments, so evaluating at those candidates is exact.
inline Int relaxed_intersection(int lo, int hi, const Coords& c) {
    const AxisArcs arcs = axis_arcs(c);
    std::vector<ArcRun> runs = arc_runs(arcs.upper);
    {
        auto more = arc_runs(arcs.lower);
        runs.insert(runs.end(), more.begin(), more.end());
    }
    const int L = lo - 1, R = hi;
    const Int wl = arcs.width[L], wr = arcs.width[R];

    auto count_at = [&](const Int& q, const Int& r) {
        Int total = 0;
        for (const auto& run : runs) {
            const Int& n = run.count;
            auto clamp = [&](const Int& v) { return v < 0 ? Int(0) : (v > n ? n : v); };
            // Interval [k0, k1) of arc indices whose endpoint lies inside.
            auto inside = [&](int seg, const Int& p0, bool descending) -> std::pair<Int, Int> {
                if (lo <= seg && seg <= hi - 1) return {Int(0), n};
                if (seg == L) {
                    if (descending) return {Int(0), clamp(p0 + n - wl + q)};
                    return {clamp(wl - q - p0), n};
                }
                if (seg == R) {
                    if (descending) return {clamp(p0 + n - r), n};
                    return {Int(0), clamp(r - p0)};
                }
                return {Int(0), Int(0)};
            };
            auto x = inside(run.from_seg, run.from_pos, true);
            auto y = inside(run.to_seg, run.to_pos, false);
            Int lx = x.second - x.first, ly = y.second - y.first;
            Int ov = std::min(x.second, y.second) - std::max(x.first, y.first);
            if (ov < 0) ov = 0;
            total += lx + ly - 2 * ov;
        }
        return total;
    };

    std::vector<Int> Q{Int(0), wl}, R_{Int(0), wr}, diag;
    for (const auto& run : runs) {
        const std::pair<int, Int> ends[4] = {{run.from_seg, run.from_pos},
                                            {run.from_seg, run.from_pos + run.count},
                                            {run.to_seg, run.to_pos},
                                            {run.to_seg, run.to_pos + run.count}};
        for (const auto& [seg, p] : ends) {
            if (seg == L) Q.push_back(wl - p);
            if (seg == R) R_.push_back(p);
        }
        if (run.from_seg == L && run.to_seg == R) diag.push_back(run.from_pos + run.count - wl + run.to_pos);
    }
    auto tidy = [](std::vector<Int>& v, const Int& top) {
        std::erase_if(v, [&](const Int& x) { return x < 0 || x > top; });
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(Q, wl);
    tidy(R_, wr);
    std::optional<Int> best;
    auto consider = [&](const Int& q, const Int& r) {
        if (q < 0 || q > wl || r < 0 || r > wr) return;
        Int v = count_at(q, r);
        if (!best || v < *best) best = v;
    };
    for (const auto& q : Q)
        for (const auto& r : R_) consider(q, r);
    for (const auto& d : diag) {
        for (const auto& q : Q)
            for (int e = -1; e <= 1; ++e) consider(q, q + d + e);
        for (const auto& r : R_)
            for (int e = -1; e <= 1; ++e) consider(r - d + e, r);
    }
    return *best;
}

// Number of connected components, by explicit tracing. Refuses multicurves
// with more than `limit` axis crossings.
inline std::optional<long> component_count(const Coords& c, long limit = 1L << 20) {
    const AxisArcs arcs = axis_arcs(c);
    Int total = 0;
    for (const auto& w : arcs.width) total += w;
    if (total > limit) return std::nullopt;
    const int segs = static_cast<int>(arcs.width.size());
    std::vector<long> offset(segs + 1, 0);
    for (int s = 0; s < segs; ++s) offset[s + 1] = offset[s] + arcs.width[s].get_si();
    const long npts = offset[segs];
    if (npts == 0) return 0L;
    auto partner = [&](const std::vector<std::pair<Int, Int>>& seq) {
        std::vector<long> mate(npts, -1);
        for (const auto& run : arc_runs(seq)) {
            const long n = run.count.get_si();
            for (long k = 0; k < n; ++k) {
                long u = offset[run.from_seg] + run.from_pos.get_si() + n - 1 - k;
                long v = offset[run.to_seg] + run.to_pos.get_si() + k;
                mate[u] = v;
                mate[v] = u;
            }
        }
        return mate;
    };
    const auto up = partner(arcs.upper), down = partner(arcs.lower);
    std::vector<char> seen(npts, 0);
    long comps = 0;
    for (long s = 0; s < npts; ++s) {
        if (seen[s]) continue;
        ++comps;
        long p = s;
        while (!seen[p]) {
            seen[p] = 1;
            p = up[p];
            seen[p] = 1;
            p = down[p];
        }
    }
    return comps;
}

// Punctures lo..hi enclosed by a relaxed curve (axis weight exactly 2).
inline std::optional<std::pair<int, int>> relaxed_range(const Coords& c) {
    const AxisArcs arcs = axis_arcs(c);
    std::vector<int> hit;
    for (int s = 0; s < static_cast<int>(arcs.width.size()); ++s) {
        if (arcs.width[s] == 0) continue;
        if (arcs.width[s] != 1) return std::nullopt;
        hit.push_back(s);
    }
    if (hit.size() != 2) return std::nullopt;
    return std::make_pair(hit[0] + 1, hit[1]);
}

}  // namespace braidsec::dyn
