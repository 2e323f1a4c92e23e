// Dehn twists as braid words, the lantern-relation checker and the trace
// criterion coming from the two-curve Thurston representation.
#pragma once

#include "braidsec/braid.hpp"
#include "braidsec/curve.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidsec {

struct TwistWord {
    BraidWord word;
    bool trivial = false;     // twist about a once-punctured disk
    bool peripheral = false;  // boundary-parallel curve, hence central
};

inline BraidWord twist_word(const Curve& c) {
    const int n = c.punctures();
    if (c.peripheral()) return BraidWord(n, full_twist_letters(1, n));
    if (!c.frame()) throw std::runtime_error("curve has no known relaxing braid");
    const Frame& f = *c.frame();
    std::vector<int> w = f.letters;
    auto full = full_twist_letters(f.lo, f.hi);
    w.insert(w.end(), full.begin(), full.end());
    for (auto it = f.letters.rbegin(); it != f.letters.rend(); ++it) w.push_back(-*it);
    return BraidWord(n, std::move(w));
}

// Twist about the round curve on an arbitrary subset; singletons give the
// identity with the trivial flag raised.
inline TwistWord twist_word_of_subset(int n, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    if (subset.size() == 1) {
        if (subset[0] < 1 || subset[0] > n) throw std::invalid_argument("puncture out of range");
        return {BraidWord(n, {}), true, false};
    }
    Curve c = round_curve(n, subset);
    return {twist_word(c), false, c.peripheral()};
}

// The twist about A_S written directly as a pure braid.
inline BraidWord round_twist(int n, std::vector<int> subset) { return twist_word_of_subset(n, std::move(subset)).word; }

struct Matrix2 {
    mpz_class a, b, c, d;
    mpz_class trace() const { return a + d; }
    mpz_class det() const { return a * d - b * c; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

inline std::pair<Matrix2, Matrix2> thurston_matrices(long i) {
    if (i < 1) throw std::invalid_argument("intersection number must be at least 1 (curves must fill)");
    return {Matrix2{1, -i, 0, 1}, Matrix2{1, 0, i, 1}};
}

enum class ProductType { Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(ProductType t) {
    switch (t) {
        case ProductType::Elliptic: return "elliptic";
        case ProductType::Parabolic: return "parabolic";
        case ProductType::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

struct ProductClassification {
    ProductType type;
    mpz_class trace;
};

inline ProductClassification classify_product_type(long i) {
    auto [ta, tb] = thurston_matrices(i);
    mpz_class tr = (ta * tb).trace();
    mpz_class mag = abs(tr);
    ProductType t = mag < 2 ? ProductType::Elliptic : (mag == 2 ? ProductType::Parabolic : ProductType::Hyperbolic);
    return {t, tr};
}

// A boundary component of the lantern's four-holed sphere: either a curve or
// a single puncture (whose twist is trivial).
using LanternBoundary = std::optional<Curve>;

struct LanternReport {
    bool configuration_ok = false;
    std::string configuration_note;
    bool linking_agrees = false;
    bool identity_holds = false;
    BraidWord lhs, rhs;
    bool verified() const { return configuration_ok && linking_agrees && identity_holds; }
};

// Checks T_x T_y T_z = T_b1 T_b2 T_b3 T_b4. Preconditions verified here: the
// boundary curves are pairwise disjoint, each is disjoint from x, y and z,
// and x, y, z pairwise meet exactly twice.
inline LanternReport verify_lantern(int n, const Curve& x, const Curve& y, const Curve& z,
                                    const std::array<LanternBoundary, 4>& boundary) {
    LanternReport rep;
    for (const Curve* c : {&x, &y, &z})
        if (c->punctures() != n) throw std::invalid_argument("lantern curve on the wrong disk");
    std::vector<const Curve*> bs;
    for (const auto& b : boundary)
        if (b) {
            if (b->punctures() != n) throw std::invalid_argument("lantern curve on the wrong disk");
            bs.push_back(&*b);
        }
    rep.configuration_ok = true;
    auto fail = [&](const std::string& why) {
        if (rep.configuration_ok) rep.configuration_note = why;
        rep.configuration_ok = false;
    };
    const std::pair<const Curve*, const char*> inner[3] = {{&x, "x"}, {&y, "y"}, {&z, "z"}};
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            if (geometric_intersection(*inner[s].first, *inner[t].first) != 2)
                fail(std::string("i(") + inner[s].second + "," + inner[t].second + ") != 2");
    for (std::size_t s = 0; s < bs.size(); ++s) {
        for (std::size_t t = s + 1; t < bs.size(); ++t)
            if (geometric_intersection(*bs[s], *bs[t]) != 0) fail("boundary curves intersect");
        for (const auto& [c, name] : inner)
            if (geometric_intersection(*bs[s], *c) != 0) fail(std::string("boundary curve meets ") + name);
    }
    rep.lhs = compose(compose(twist_word(x), twist_word(y)), twist_word(z));
    rep.rhs = BraidWord(n, {});
    for (const Curve* b : bs) rep.rhs = compose(rep.rhs, twist_word(*b));
    rep.linking_agrees = crossing_matrix(rep.lhs) == crossing_matrix(rep.rhs);
    rep.identity_holds = rep.linking_agrees && equals(rep.lhs, rep.rhs);
    return rep;
}

}  // namespace braidsec
