// Isotopy classes of essential simple closed curves on the n-punctured disk.
#pragma once

#include "braidsec/braid.hpp"
#include "braidsec/dynnikov.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace braidsec {

struct RoundCurveSpec {
    int n = 0;
    std::vector<int> subset;  // sorted, distinct, 1-based

    void validate() const {
        if (n < 1) throw std::invalid_argument("puncture count must be positive");
        if (subset.size() < 2) throw std::invalid_argument("a round curve needs at least two punctures");
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (subset[k] < 1 || subset[k] > n) throw std::invalid_argument("subset entry out of range");
            if (k && subset[k] <= subset[k - 1]) throw std::invalid_argument("subset must be strictly increasing");
        }
    }
    bool peripheral() const { return static_cast<int>(subset.size()) == n; }
};

// How a curve was described; kept so that JSON documents round-trip.
struct RoundSource { RoundCurveSpec spec; };
struct ImageSource { RoundCurveSpec base; std::vector<int> conjugator; };
struct CoordsSource {};
using CurveSource = std::variant<RoundSource, ImageSource, CoordsSource>;

// The curve equals frame_letters applied to the round curve around lo..hi.
struct Frame {
    std::vector<int> letters;
    int lo = 0, hi = 0;
};

class Curve {
public:
    int punctures() const { return n_; }
    bool peripheral() const { return peripheral_; }
    const dyn::Coords& coords() const { return coords_; }
    const std::optional<Frame>& frame() const { return frame_; }
    const CurveSource& source() const { return source_; }

    // Flat coordinate list a_1..a_{n-2}, b_1..b_{n-2}.
    std::vector<dyn::Int> flat_coords() const {
        std::vector<dyn::Int> v = coords_.a;
        v.insert(v.end(), coords_.b.begin(), coords_.b.end());
        return v;
    }

    friend bool operator==(const Curve& x, const Curve& y) {
        return x.n_ == y.n_ && x.peripheral_ == y.peripheral_ && x.coords_ == y.coords_;
    }

    friend Curve round_curve(const RoundCurveSpec& spec);
    friend Curve curve_from_coords(int n, const std::vector<dyn::Int>& flat);
    friend Curve act(const BraidWord& u, const Curve& c);
    friend Curve image_curve(const RoundCurveSpec& base, const BraidWord& conjugator);

private:
    int n_ = 0;
    bool peripheral_ = false;
    dyn::Coords coords_;
    std::optional<Frame> frame_;
    CurveSource source_ = CoordsSource{};
};

namespace detail {

// Searches for a braid carrying the curve to a relaxed one by repeatedly
// finding, within a bounded breadth-first horizon, a word that strictly
// lowers the number of axis crossings.
inline std::optional<Frame> search_frame(const dyn::Coords& start, int max_depth = 5,
                                         std::size_t max_states = 400000) {
    const int m = start.punctures();
    std::vector<int> gens;
    for (int g = 1; g < m; ++g) {
        gens.push_back(g);
        gens.push_back(-g);
    }
    dyn::Coords cur = start;
    std::vector<int> applied;  // cur = applied(start)
    dyn::Int weight = dyn::axis_weight(cur);
    while (weight > 2) {
        struct Node { dyn::Coords c; std::vector<int> word; };
        std::deque<Node> frontier{{cur, {}}};
        std::set<std::vector<dyn::Int>> seen;
        auto key = [](const dyn::Coords& c) {
            std::vector<dyn::Int> k = c.a;
            k.insert(k.end(), c.b.begin(), c.b.end());
            return k;
        };
        seen.insert(key(cur));
        std::optional<Node> found;
        dyn::Int found_weight = weight;
        for (int depth = 0; depth < max_depth && !found; ++depth) {
            std::deque<Node> next;
            for (const auto& node : frontier) {
                for (int g : gens) {
                    dyn::Coords c = node.c;
                    dyn::apply_letter(c, g);
                    if (!seen.insert(key(c)).second) continue;
                    std::vector<int> w{g};
                    w.insert(w.end(), node.word.begin(), node.word.end());
                    dyn::Int wt = dyn::axis_weight(c);
                    if (wt < found_weight) {
                        found_weight = wt;
                        found = Node{c, w};
                    }
                    next.push_back({std::move(c), std::move(w)});
                    if (seen.size() > max_states) return std::nullopt;
                }
            }
            frontier = std::move(next);
        }
        if (!found) return std::nullopt;
        cur = found->c;
        applied.insert(applied.begin(), found->word.begin(), found->word.end());
        weight = found_weight;
    }
    auto range = dyn::relaxed_range(cur);
    if (!range) return std::nullopt;
    Frame f;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) f.letters.push_back(-*it);
    f.lo = range->first;
    f.hi = range->second;
    return f;
}

inline void require_same(const Curve& x, const Curve& y) {
    if (x.punctures() != y.punctures()) throw std::invalid_argument("curves live on different disks");
}

}  // namespace detail

inline Curve round_curve(const RoundCurveSpec& spec) {
    spec.validate();
    Curve c;
    c.n_ = spec.n;
    c.source_ = RoundSource{spec};
    if (spec.peripheral()) {
        c.peripheral_ = true;
        if (spec.n >= 3) c.coords_ = dyn::zero_coords(spec.n);
        return c;
    }
    SortingBraid sb = sorting_braid(spec.subset);
    std::vector<int> block;
    for (int p = sb.lo; p <= sb.hi; ++p) block.push_back(p);
    c.coords_ = dyn::act(sb.letters, dyn::round_coords(spec.n, block));
    c.frame_ = Frame{sb.letters, sb.lo, sb.hi};
    return c;
}

inline Curve round_curve(int n, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    return round_curve(RoundCurveSpec{n, std::move(subset)});
}

inline Curve act(const BraidWord& u, const Curve& c) {
    if (u.strands != c.n_) throw std::invalid_argument("braid and curve have different strand counts");
    Curve out = c;
    if (!c.peripheral_) {
        out.coords_ = dyn::act(u.letters, c.coords_);
        if (c.frame_) {
            out.frame_->letters = u.letters;
            out.frame_->letters.insert(out.frame_->letters.end(), c.frame_->letters.begin(), c.frame_->letters.end());
        }
    }
    if (const auto* r = std::get_if<RoundSource>(&c.source_)) {
        out.source_ = ImageSource{r->spec, u.letters};
    } else if (const auto* im = std::get_if<ImageSource>(&c.source_)) {
        ImageSource s = *im;
        s.conjugator = u.letters;
        s.conjugator.insert(s.conjugator.end(), im->conjugator.begin(), im->conjugator.end());
        out.source_ = s;
    }
    return out;
}

inline Curve image_curve(const RoundCurveSpec& base, const BraidWord& conjugator) {
    Curve c = act(conjugator, round_curve(base));
    c.source_ = ImageSource{base, conjugator.letters};
    return c;
}

inline Curve curve_from_coords(int n, const std::vector<dyn::Int>& flat) {
    if (n < 3) throw std::invalid_argument("coordinate curves need at least 3 punctures");
    if (static_cast<int>(flat.size()) != 2 * n - 4)
        throw std::invalid_argument("expected " + std::to_string(2 * n - 4) + " coordinates");
    Curve c;
    c.n_ = n;
    c.coords_.a.assign(flat.begin(), flat.begin() + (n - 2));
    c.coords_.b.assign(flat.begin() + (n - 2), flat.end());
    if (c.coords_.is_zero()) throw std::invalid_argument("zero coordinates describe no essential curve");
    // Tracing is exact but linear in the crossing count. For larger input a
    // found frame is the certificate instead: each component crosses the
    // axis at least twice, so relaxing to weight 2 leaves room for only one.
    auto comps = dyn::component_count(c.coords_);
    if (comps && *comps != 1)
        throw std::invalid_argument("coordinates describe " + std::to_string(*comps) + " components");
    c.frame_ = detail::search_frame(c.coords_);
    if (!comps && !c.frame_) throw std::invalid_argument("coordinates too large to validate");
    if (c.frame_ && c.frame_->lo == c.frame_->hi)
        throw std::invalid_argument("curve bounds a once-punctured disk");
    c.source_ = CoordsSource{};
    return c;
}

inline dyn::Int geometric_intersection(const Curve& x, const Curve& y) {
    detail::require_same(x, y);
    if (x.peripheral() || y.peripheral() || x.punctures() < 3) return 0;
    const Curve* framed = x.frame() ? &x : (y.frame() ? &y : nullptr);
    if (!framed) throw std::runtime_error("neither curve could be relaxed; intersection unavailable");
    const Curve& other = framed == &x ? y : x;
    const Frame& f = *framed->frame();
    BraidWord undo = inverse(BraidWord(x.punctures(), f.letters));
    return dyn::relaxed_intersection(f.lo, f.hi, dyn::act(undo.letters, other.coords()));
}

inline bool is_isotopic(const Curve& x, const Curve& y) {
    detail::require_same(x, y);
    return x == y;
}

// All non-peripheral round curves on n punctures, in lexicographic order.
inline std::vector<RoundCurveSpec> all_round_specs(int n, bool include_peripheral = false) {
    std::vector<RoundCurveSpec> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int p = 1; p <= n; ++p)
            if (mask & (1u << (p - 1))) S.push_back(p);
        if (S.size() < 2) continue;
        if (static_cast<int>(S.size()) == n && !include_peripheral) continue;
        out.push_back({n, S});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.subset < b.subset; });
    return out;
}

}  // namespace braidsec
