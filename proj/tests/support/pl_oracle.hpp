// Desk-scale intersection oracle for round curves, independent of the
// coordinate machinery.
//
// Punctures sit at (p, 0). The round curve around S is drawn as the boundary
// of a rectilinear neighbourhood (radius r) of the horizontal segment y = -1
// under min S..max S together with the vertical arms from each member down to
// that segment. The two curves use different radii so all crossings are
// transverse. Crossing counts are exact; empty bigons are then removed one at
// a time. A pair of crossings consecutive along both curves spans a bigon
// with no puncture inside exactly when the loop made of the two connecting
// arcs is trivial in the free group of the punctured plane. That group is
// read off from crossings with the downward rays x = p, y < 0.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

struct Point {
    mpq_class x, y;
};

using Polygon = std::vector<Point>;  // closed, axis-parallel edges

inline Polygon round_polygon(const std::vector<int>& subset, const mpq_class& r) {
    const mpq_class h = -1;
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    Polygon poly;
    poly.push_back({s.front() - r, r});
    poly.push_back({s.front() - r, h - r});
    poly.push_back({s.back() + r, h - r});
    poly.push_back({s.back() + r, r});
    for (std::size_t k = s.size() - 1; k > 0; --k) {
        poly.push_back({s[k] - r, r});
        poly.push_back({s[k] - r, h + r});
        poly.push_back({s[k - 1] + r, h + r});
        poly.push_back({s[k - 1] + r, r});
    }
    return poly;
}

// An event along a curve: a crossing with the other curve (id >= 0) or a ray
// crossing contributing a free-group letter (id < 0).
struct Event {
    std::size_t edge;
    mpq_class t;
    int id;
    int letter;
};

struct Edge {
    Point a, b;
    bool vertical() const { return a.x == b.x; }
};

inline std::vector<Edge> edges(const Polygon& p) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < p.size(); ++k) e.push_back({p[k], p[(k + 1) % p.size()]});
    return e;
}

inline bool strictly_between(const mpq_class& v, const mpq_class& a, const mpq_class& b) {
    return (a < v && v < b) || (b < v && v < a);
}

inline mpq_class param(const Edge& e, const Point& p) {
    return e.vertical() ? (p.y - e.a.y) / (e.b.y - e.a.y) : (p.x - e.a.x) / (e.b.x - e.a.x);
}

inline std::optional<Point> crossing(const Edge& e, const Edge& f) {
    if (e.vertical() == f.vertical()) return std::nullopt;  // radii differ, so parallel edges never overlap
    const Edge& v = e.vertical() ? e : f;
    const Edge& h = e.vertical() ? f : e;
    if (strictly_between(v.a.x, h.a.x, h.b.x) && strictly_between(h.a.y, v.a.y, v.b.y)) return Point{v.a.x, h.a.y};
    return std::nullopt;
}

inline void add_ray_events(const std::vector<Edge>& es, int n, std::vector<Event>& out) {
    for (std::size_t k = 0; k < es.size(); ++k) {
        const Edge& e = es[k];
        if (e.vertical() || e.a.y >= 0) continue;
        for (int p = 1; p <= n; ++p)
            if (strictly_between(mpq_class(p), e.a.x, e.b.x)) {
                Point q{p, e.a.y};
                out.push_back({k, param(e, q), -1, e.b.x > e.a.x ? p : -p});
            }
    }
}

inline void sort_events(std::vector<Event>& ev) {
    std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
        return x.edge != y.edge ? x.edge < y.edge : x.t < y.t;
    });
}

inline void push_reduced_letter(std::vector<int>& w, int x) {
    if (!w.empty() && w.back() == -x) w.pop_back();
    else w.push_back(x);
}

// Letters read walking forward along `ev` from the event with id p to the
// event with id q, or nullopt when another crossing lies in between.
inline std::optional<std::vector<int>> forward_path(const std::vector<Event>& ev, int p, int q) {
    const std::size_t m = ev.size();
    std::size_t start = m;
    for (std::size_t k = 0; k < m; ++k)
        if (ev[k].id == p) start = k;
    std::vector<int> letters;
    for (std::size_t s = 1; s < m; ++s) {
        const Event& e = ev[(start + s) % m];
        if (e.id == q) return letters;
        if (e.id >= 0) return std::nullopt;
        letters.push_back(e.letter);
    }
    return std::nullopt;
}

inline bool trivial_loop(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> w;
    for (int x : first) push_reduced_letter(w, x);
    for (int x : second) push_reduced_letter(w, x);
    while (w.size() >= 2 && w.front() == -w.back()) {  // cyclic reduction
        w.erase(w.begin());
        w.pop_back();
    }
    return w.empty();
}

struct OracleResult {
    long transverse_crossings = 0;
    long after_bigon_removal = 0;
};

inline OracleResult intersection(int n, const std::vector<int>& s1, const std::vector<int>& s2) {
    const auto e1 = edges(round_polygon(s1, mpq_class(1, 4)));
    const auto e2 = edges(round_polygon(s2, mpq_class(1, 3)));
    std::vector<Event> a, b;
    int next = 0;
    for (std::size_t i = 0; i < e1.size(); ++i)
        for (std::size_t j = 0; j < e2.size(); ++j)
            if (auto p = crossing(e1[i], e2[j])) {
                a.push_back({i, param(e1[i], *p), next, 0});
                b.push_back({j, param(e2[j], *p), next, 0});
                ++next;
            }
    OracleResult res;
    res.transverse_crossings = next;
    add_ray_events(e1, n, a);
    add_ray_events(e2, n, b);
    sort_events(a);
    sort_events(b);

    auto reverse_path = [](std::vector<int> w) {
        std::reverse(w.begin(), w.end());
        for (int& x : w) x = -x;
        return w;
    };
    for (bool removed = true; removed;) {
        removed = false;
        for (const Event& ep : a) {
            if (ep.id < 0) continue;
            for (const Event& eq : a) {
                if (eq.id < 0 || eq.id == ep.id) continue;
                auto along_a = forward_path(a, ep.id, eq.id);
                if (!along_a) continue;
                // back from q to p along the second curve, in either direction
                std::optional<std::vector<int>> back = forward_path(b, eq.id, ep.id);
                bool found = back && trivial_loop(*along_a, *back);
                if (!found) {
                    auto fwd = forward_path(b, ep.id, eq.id);
                    found = fwd && trivial_loop(*along_a, reverse_path(*fwd));
                }
                if (found) {
                    const int p = ep.id, q = eq.id;
                    auto drop = [&](std::vector<Event>& ev) {
                        ev.erase(std::remove_if(ev.begin(), ev.end(), [&](const Event& e) { return e.id == p || e.id == q; }),
                                 ev.end());
                    };
                    drop(a);
                    drop(b);
                    removed = true;
                    break;
                }
            }
            if (removed) break;
        }
    }
    for (const Event& e : a) res.after_bigon_removal += e.id >= 0;
    return res;
}

}  // namespace oracle
