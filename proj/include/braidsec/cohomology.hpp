// Rational cohomology of products of closed surfaces, diagonal classes, and
// the obstruction computations for sections over configuration spaces of
// closed surfaces and spheres.
//
// Orientation convention: b_k ⌣ a_k = ω and a_k ⌣ b_k = -ω on each surface
// factor. With this choice the displayed diagonal formula
//     [Δ_ij] = ω_i + ω_j + Σ_k a_k^(i) b_k^(j) - b_k^(i) a_k^(j)
// restricts along the diagonal to (2 - 2g) ω, the Euler class of the surface.
#pragma once

#include "braidsec/linalg.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidsec::coh {

using linalg::Q;

// Per-factor generator code: 0 = 1, 1..g = a_k, g+1..2g = b_k, 2g+1 = ω.
using Monomial = std::vector<int>;

class GradedClass {
public:
    GradedClass(int genus, int factors) : g_(genus), n_(factors) {
        if (genus < 1) throw std::invalid_argument("genus must be at least 1");
        if (factors < 1) throw std::invalid_argument("need at least one factor");
    }

    int genus() const { return g_; }
    int factors() const { return n_; }
    const std::map<Monomial, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int code_degree(int code) const { return code == 0 ? 0 : (code <= 2 * g_ ? 1 : 2); }
    int monomial_degree(const Monomial& m) const {
        int d = 0;
        for (int c : m) d += code_degree(c);
        return d;
    }
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return monomial_degree(terms_.begin()->first);
    }

    void add(const Monomial& m, const Q& coeff) {
        if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("monomial has the wrong length");
        if (coeff == 0) return;
        if (auto d = degree(); d && *d != monomial_degree(m))
            throw std::invalid_argument("graded class must be homogeneous");
        Q& slot = terms_[m];
        slot += coeff;
        if (slot == 0) terms_.erase(m);
    }

    Q coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Q(0) : it->second;
    }

    GradedClass& operator+=(const GradedClass& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    GradedClass& operator-=(const GradedClass& o) { return *this += o * Q(-1); }
    friend GradedClass operator+(GradedClass x, const GradedClass& y) { return x += y; }
    friend GradedClass operator-(GradedClass x, const GradedClass& y) { return x -= y; }
    friend GradedClass operator*(GradedClass x, const Q& s) {
        if (s == 0) {
            x.terms_.clear();
            return x;
        }
        for (auto& [m, c] : x.terms_) c *= s;
        return x;
    }
    friend GradedClass operator*(const Q& s, GradedClass x) { return std::move(x) * s; }
    friend bool operator==(const GradedClass&, const GradedClass&) = default;

    void require_same(const GradedClass& o) const {
        if (g_ != o.g_ || n_ != o.n_) throw std::invalid_argument("classes live in different rings");
    }

    std::string generator_name(int code, int factor) const {
        const std::string f = std::to_string(factor);
        if (code <= g_) return "a" + std::to_string(code) + "^(" + f + ")";
        if (code <= 2 * g_) return "b" + std::to_string(code - g_) + "^(" + f + ")";
        return "w^(" + f + ")";
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Q mag = abs(c);
            out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            std::string body;
            for (int i = 0; i < n_; ++i)
                if (m[i] != 0) body += (body.empty() ? "" : " ") + generator_name(m[i], i + 1);
            if (body.empty()) out << mag.get_str();
            else if (mag == 1) out << body;
            else out << mag.get_str() << " " << body;
            first = false;
        }
        return out.str();
    }

private:
    int g_;
    int n_;
    std::map<Monomial, Q> terms_;
};

// Product of two single-factor generators: sign and resulting code, or
// nullopt when the product vanishes.
inline std::optional<std::pair<int, int>> factor_product(int g, int x, int y) {
    if (x == 0) return std::make_pair(1, y);
    if (y == 0) return std::make_pair(1, x);
    if (x == 2 * g + 1 || y == 2 * g + 1) return std::nullopt;
    const bool xa = x <= g, ya = y <= g;
    const int kx = xa ? x : x - g, ky = ya ? y : y - g;
    if (xa == ya || kx != ky) return std::nullopt;
    return std::make_pair(xa ? -1 : 1, 2 * g + 1);  // a⌣b = -ω, b⌣a = ω
}

inline GradedClass cup(const GradedClass& x, const GradedClass& y) {
    x.require_same(y);
    const int n = x.factors(), g = x.genus();
    GradedClass out(g, n);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            // reorder x1..xn y1..yn into x1 y1 ... xn yn: y_i passes x_{i+1..n}
            int sign = 1;
            int later = 0;
            for (int i = n - 1; i >= 0; --i) {
                if ((x.code_degree(my[i]) * later) % 2) sign = -sign;
                later += x.code_degree(mx[i]);
            }
            Monomial m(n, 0);
            bool zero = false;
            for (int i = 0; i < n && !zero; ++i) {
                auto p = factor_product(g, mx[i], my[i]);
                if (!p) zero = true;
                else {
                    sign *= p->first;
                    m[i] = p->second;
                }
            }
            if (!zero) out.add(m, cx * cy * sign);
        }
    return out;
}

inline GradedClass unit(int g, int n) {
    GradedClass c(g, n);
    c.add(Monomial(n, 0), 1);
    return c;
}

inline GradedClass generator(int g, int n, int factor, int code) {
    if (factor < 1 || factor > n) throw std::out_of_range("factor index out of range");
    GradedClass c(g, n);
    Monomial m(n, 0);
    m[factor - 1] = code;
    c.add(m, 1);
    return c;
}
inline GradedClass a(int g, int n, int factor, int k) { return generator(g, n, factor, k); }
inline GradedClass b(int g, int n, int factor, int k) { return generator(g, n, factor, g + k); }
inline GradedClass omega(int g, int n, int factor) { return generator(g, n, factor, 2 * g + 1); }

inline GradedClass diagonal_class(int g, int n, int i, int j) {
    if (i == j) throw std::invalid_argument("diagonal class needs i != j");
    GradedClass d = omega(g, n, i) + omega(g, n, j);
    for (int k = 1; k <= g; ++k) {
        d += cup(a(g, n, i, k), b(g, n, j, k));
        d -= cup(b(g, n, i, k), a(g, n, j, k));
    }
    return d;
}

// Degree-2 basis of H^2(S_g^n): all degree-2 monomials in canonical order.
inline std::vector<Monomial> degree_two_basis(int g, int n) {
    std::vector<Monomial> out;
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 2 * g + 1;
        out.push_back(m);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int x = 1; x <= 2 * g; ++x)
                for (int y = 1; y <= 2 * g; ++y) {
                    Monomial m(n, 0);
                    m[i] = x;
                    m[j] = y;
                    out.push_back(m);
                }
    return out;
}

inline std::vector<Q> to_vector(const GradedClass& c, const std::vector<Monomial>& basis) {
    std::vector<Q> v;
    v.reserve(basis.size());
    for (const auto& m : basis) v.push_back(c.coefficient(m));
    std::size_t found = 0;
    for (const auto& m : basis)
        if (c.coefficient(m) != 0) ++found;
    if (found != c.terms().size()) throw std::invalid_argument("class is not of degree two");
    return v;
}

inline std::vector<GradedClass> diagonal_classes(int g, int n) {
    std::vector<GradedClass> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(diagonal_class(g, n, i, j));
    return out;
}

// Coefficients on [Δ_ij] (i < j, lexicographic) expressing c, if c lies in
// their span.
inline std::optional<std::vector<Q>> diagonal_span_coefficients(const GradedClass& c) {
    const auto basis = degree_two_basis(c.genus(), c.factors());
    std::vector<std::vector<Q>> gens;
    for (const auto& d : diagonal_classes(c.genus(), c.factors())) gens.push_back(to_vector(d, basis));
    return linalg::span_coefficients(gens, to_vector(c, basis));
}

inline long h1_pconf_dimension(int g, int n) {
    if (g <= 1 || n <= 0) throw std::out_of_range("need g > 1 and n > 0");
    return 2L * g * n;
}

// Candidate pullback along f : PConf_n(S_g) -> S_g on degree one. Row r of
// the matrix is the image of a_{r+1} (r < g) or b_{r-g+1} (r >= g) written in
// the basis of H^1(S_g^n), ordered factor by factor, a_1..a_g then b_1..b_g
// inside each factor. The image of the fundamental class is forced by the
// ring structure, f*[S] = f*b_1 ⌣ f*a_1, scaled by omega_scale.
struct FStar {
    linalg::Matrix<Q> matrix;
    Q omega_scale = 1;
};

inline GradedClass degree_one_class(int g, int n, const std::vector<Q>& coords) {
    if (static_cast<int>(coords.size()) != 2 * g * n) throw std::invalid_argument("degree-one vector has wrong size");
    GradedClass c(g, n);
    for (int i = 0; i < n; ++i)
        for (int x = 1; x <= 2 * g; ++x) {
            const Q& v = coords[static_cast<std::size_t>(i * 2 * g + x - 1)];
            if (v == 0) continue;
            Monomial m(n, 0);
            m[i] = x;
            c.add(m, v);
        }
    return c;
}

inline void validate(const FStar& f, int g, int n) {
    if (static_cast<int>(f.matrix.size()) != 2 * g) throw std::invalid_argument("pullback matrix needs 2g rows");
    for (const auto& row : f.matrix)
        if (static_cast<int>(row.size()) != 2 * g * n)
            throw std::invalid_argument("pullback matrix rows need 2gn entries");
}

inline GradedClass pullback_a(const FStar& f, int g, int n, int k) { return degree_one_class(g, n, f.matrix[k - 1]); }
inline GradedClass pullback_b(const FStar& f, int g, int n, int k) { return degree_one_class(g, n, f.matrix[g + k - 1]); }

inline GradedClass pullback_fundamental(const FStar& f, int g, int n) {
    return cup(pullback_b(f, g, n, 1), pullback_a(f, g, n, 1)) * f.omega_scale;
}

// g_i^*[Δ] for g_i = (f, p_i).
inline GradedClass pulled_back_diagonal(const FStar& f, int g, int n, int i) {
    validate(f, g, n);
    GradedClass out = pullback_fundamental(f, g, n) + omega(g, n, i);
    for (int k = 1; k <= g; ++k) {
        out += cup(pullback_a(f, g, n, k), b(g, n, i, k));
        out -= cup(pullback_b(f, g, n, k), a(g, n, i, k));
    }
    return out;
}

enum class Verdict { NoSection, Inconclusive };
inline const char* to_string(Verdict v) { return v == Verdict::NoSection ? "no_section" : "inconclusive"; }

struct DiagonalTest {
    int index = 0;  // i in g_i
    GradedClass value;
    bool in_span = false;
    std::vector<Q> span_coefficients;  // when in_span
};

struct ObstructionVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<DiagonalTest> tests;
    std::optional<DiagonalTest> witness;  // first g_i^*[Δ] outside the diagonal span
    std::vector<std::string> notes;
};

inline ObstructionVerdict obstruction_closed_surface(int g, int n, const FStar& f) {
    if (g <= 1) throw std::out_of_range("closed-surface obstruction needs g > 1");
    if (n < 2) throw std::out_of_range("closed-surface obstruction needs n >= 2");
    validate(f, g, n);
    ObstructionVerdict v;
    for (int i = 1; i <= n; ++i) {
        DiagonalTest t{i, pulled_back_diagonal(f, g, n, i), false, {}};
        if (auto coeffs = diagonal_span_coefficients(t.value)) {
            t.in_span = true;
            t.span_coefficients = *coeffs;
        }
        if (!t.in_span && !v.witness) v.witness = t;
        v.tests.push_back(std::move(t));
    }
    v.verdict = v.witness ? Verdict::NoSection : Verdict::Inconclusive;
    return v;
}

// Presets for the three scenarios of the genus > 1 argument.
inline FStar preset_zero(int g, int n) { return {linalg::zeros<Q>(2 * g, 2 * g * n), 1}; }

// f* a_1 = x with x supported on factor `support`, all other generators to 0.
inline FStar preset_rank_one(int g, int n, const std::vector<Q>& x_on_factor, int support = 1) {
    if (static_cast<int>(x_on_factor.size()) != 2 * g) throw std::invalid_argument("x needs 2g entries");
    FStar f = preset_zero(g, n);
    for (int c = 0; c < 2 * g; ++c) f.matrix[0][static_cast<std::size_t>((support - 1) * 2 * g + c)] = x_on_factor[c];
    return f;
}

inline FStar preset_projection(int g, int n, int factor = 1) {
    FStar f = preset_zero(g, n);
    for (int r = 0; r < 2 * g; ++r) f.matrix[r][static_cast<std::size_t>((factor - 1) * 2 * g + r)] = 1;
    return f;
}

// Replays the factoring case: f* has image in H_1 and g_2^*[Δ] must equal
// λ[Δ_12]. Unknowns are the 4g^2 coordinates of f* a_k, f* b_k in H_1, the
// coefficient μ of f*[S] on ω_1, and λ. Returns the unique solution.
struct FactoringSolution {
    bool unique = false;
    Q lambda, mu;
    FStar fstar;
    GradedClass g1_value;
    bool g1_in_span = true;
};

inline FactoringSolution solve_factoring_case(int g, int n) {
    if (g <= 1 || n < 2) throw std::out_of_range("need g > 1 and n >= 2");
    const auto basis = degree_two_basis(g, n);
    const int fcoords = 4 * g * g;
    const int unknowns = fcoords + 2;
    // Express the equation as columns: each unknown contributes a class.
    std::vector<std::vector<Q>> cols;
    for (int u = 0; u < fcoords; ++u) {
        const int row = u / (2 * g), col = u % (2 * g);
        GradedClass img(g, n);
        Monomial m(n, 0);
        m[0] = col + 1;
        img.add(m, 1);  // unit vector in H_1
        GradedClass term = row < g ? cup(img, b(g, n, 2, row + 1)) : cup(img, a(g, n, 2, row - g + 1)) * Q(-1);
        cols.push_back(to_vector(term, basis));
    }
    cols.push_back(to_vector(omega(g, n, 1), basis));                   // μ
    cols.push_back(to_vector(diagonal_class(g, n, 1, 2) * Q(-1), basis));  // λ
    std::vector<Q> rhs = to_vector(omega(g, n, 2) * Q(-1), basis);
    auto sol = linalg::solve(linalg::transpose(cols), rhs);
    FactoringSolution out{false, 0, 0, preset_zero(g, n), GradedClass(g, n), true};
    if (!sol) return out;
    out.unique = sol->nullity == 0;
    const auto& z = sol->particular;
    for (int u = 0; u < fcoords; ++u) out.fstar.matrix[u / (2 * g)][u % (2 * g)] = z[u];
    out.mu = z[fcoords];
    out.lambda = z[fcoords + 1];
    (void)unknowns;
    out.g1_value = pulled_back_diagonal(out.fstar, g, n, 1);
    out.g1_in_span = diagonal_span_coefficients(out.g1_value).has_value();
    return out;
}

// The n = 2 sphere argument in H^{2k}(S^{2k} x S^{2k} - Δ; Q). Classes are
// pairs (coefficient of c_1, coefficient of c_2); the Thom relation says the
// diagonal class c_1 + c_2 dies, i.e. c_2 = relation * c_1 with relation -1.
// Unknown κ with f*c = κ c_1. Constraint i comes from g_i^*[Δ] = κ c_1 + c_i.
struct SphereConstraints {
    int k = 1;
    // each constraint reads coeff * κ + constant = 0
    std::vector<std::pair<Q, Q>> constraints;
    bool satisfiable = false;
    std::optional<Q> kappa;
    Verdict verdict = Verdict::Inconclusive;

    std::vector<std::string> rendered() const {
        std::vector<std::string> out;
        for (const auto& [c, d] : constraints) {
            std::string s = (c == 1 ? "κ" : (c == -1 ? "-κ" : c.get_str() + "κ"));
            if (d > 0) s += "+" + d.get_str();
            else if (d < 0) s += d.get_str();
            out.push_back(s + "=0");
        }
        return out;
    }
};

inline SphereConstraints s2k_section_constraints(int k, const Q& relation = -1) {
    if (k < 1) throw std::out_of_range("k must be positive");
    SphereConstraints s;
    s.k = k;
    // reduce (x c_1 + y c_2) to the c_1 coordinate of the quotient
    auto reduce = [&](const Q& x, const Q& y) -> Q { return x + relation * y; };
    // g_1^*[Δ] = κ c_1 + c_1 ; g_2^*[Δ] = κ c_1 + c_2
    s.constraints.push_back({reduce(1, 0), reduce(1, 0)});
    s.constraints.push_back({reduce(1, 0), reduce(0, 1)});
    linalg::Matrix<Q> A;
    std::vector<Q> rhs;
    for (const auto& [c, d] : s.constraints) {
        A.push_back({c});
        rhs.push_back(-d);
    }
    auto sol = linalg::solve(A, rhs);
    s.satisfiable = sol.has_value();
    if (sol) s.kappa = sol->particular[0];
    s.verdict = s.satisfiable ? Verdict::Inconclusive : Verdict::NoSection;
    return s;
}

// Relations p_i + p_j (i < j) on the generators p_1..p_n of H^2((S^2)^n; Z).
inline linalg::Matrix<linalg::Z> sphere_relation_matrix(int n) {
    linalg::Matrix<linalg::Z> R;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<linalg::Z> row(n, 0);
            row[i] = 1;
            row[j] = 1;
            R.push_back(row);
        }
    return R;
}

inline std::vector<linalg::Z> h2_pconf_sphere(int n) {
    if (n < 2) throw std::out_of_range("need n >= 2");
    return linalg::cokernel_invariants(sphere_relation_matrix(n), static_cast<std::size_t>(n));
}

struct EulerWitness {
    bool vanishes = false;
    std::vector<std::pair<std::pair<int, int>, linalg::Z>> combination;  // ((i,j), coefficient)
};

// Decides whether 2 p_k lies in the relation lattice and, if so, returns an
// explicit integer combination of the relations p_i + p_j.
inline EulerWitness euler_class_vanishes_sphere(int n, int k) {
    if (n <= 2) throw std::out_of_range("need n > 2");
    if (k < 1 || k > n) throw std::out_of_range("k out of range");
    auto R = sphere_relation_matrix(n);
    std::vector<linalg::Z> target(n, 0);
    target[k - 1] = 2;
    auto x = linalg::solve_integer(linalg::transpose(R), target);
    EulerWitness w;
    if (!x) return w;
    std::size_t r = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++r)
            if ((*x)[r] != 0) w.combination.push_back({{i, j}, (*x)[r]});
    // recheck the combination directly
    std::vector<linalg::Z> sum(n, 0);
    for (const auto& [ij, c] : w.combination) {
        sum[ij.first - 1] += c;
        sum[ij.second - 1] += c;
    }
    w.vanishes = sum == target;
    return w;
}

}  // namespace braidsec::coh
