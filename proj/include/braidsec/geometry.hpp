// The point-adding embeddings on the plane and the sphere: a new point is
// pushed off x_k (or off the point at infinity) along a unit direction for a
// time equal to half of the relevant minimal distance.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace braidsec::geo {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using PlanarConfig = std::vector<Vec2>;
using SphereConfig = std::vector<Vec3>;

inline constexpr double unit_tolerance = 1e-12;

inline double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }
inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
inline double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }
inline Vec3 cross(const Vec3& x, const Vec3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}
inline double distance(const Vec2& x, const Vec2& y) { return std::hypot(x[0] - y[0], x[1] - y[1]); }

// Great-circle distance, stable for nearly equal and nearly antipodal points.
inline double spherical_distance(const Vec3& x, const Vec3& y) { return std::atan2(norm(cross(x, y)), dot(x, y)); }

inline void check_sphere_config(const SphereConfig& cfg) {
    for (const auto& p : cfg)
        if (std::abs(norm(p) - 1.0) > unit_tolerance) throw std::invalid_argument("sphere point is not unit length");
}

inline double epsilon_pairwise(const PlanarConfig& cfg) {
    if (cfg.size() < 2) throw std::invalid_argument("need at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j) best = std::min(best, distance(cfg[i], cfg[j]));
    return best / 2;
}

inline double epsilon_pairwise(const SphereConfig& cfg) {
    if (cfg.size() < 2) throw std::invalid_argument("need at least two points");
    check_sphere_config(cfg);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j) best = std::min(best, spherical_distance(cfg[i], cfg[j]));
    return best / 2;
}

inline constexpr Vec3 north_pole{0.0, 0.0, 1.0};

// Inverse stereographic projection from the north pole.
inline Vec3 lift(const Vec2& p) {
    const double r2 = p[0] * p[0] + p[1] * p[1];
    const double d = r2 + 1;
    return {2 * p[0] / d, 2 * p[1] / d, (r2 - 1) / d};
}

inline Vec2 project(const Vec3& q) {
    const double d = 1 - q[2];
    if (d <= 0) throw std::domain_error("the north pole has no planar image");
    return {q[0] / d, q[1] / d};
}

inline double epsilon_infinity(const PlanarConfig& cfg) {
    if (cfg.empty()) throw std::invalid_argument("need at least one point");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : cfg) best = std::min(best, spherical_distance(lift(p), north_pole));
    return best / 2;
}

inline void check_unit(double length) {
    if (std::abs(length - 1.0) > unit_tolerance) throw std::invalid_argument("direction is not a unit vector");
}

// Output lists the new point first, followed by the untouched input.
inline PlanarConfig add_near_k(const PlanarConfig& cfg, int k, const Vec2& v) {
    if (k < 1 || k > static_cast<int>(cfg.size())) throw std::out_of_range("k out of range");
    check_unit(norm(v));
    const double eps = epsilon_pairwise(cfg);
    const Vec2& x = cfg[static_cast<std::size_t>(k - 1)];
    PlanarConfig out;
    out.reserve(cfg.size() + 1);
    out.push_back({x[0] + eps * v[0], x[1] + eps * v[1]});
    out.insert(out.end(), cfg.begin(), cfg.end());
    return out;
}

inline SphereConfig add_near_k(const SphereConfig& cfg, int k, const Vec3& v) {
    if (k < 1 || k > static_cast<int>(cfg.size())) throw std::out_of_range("k out of range");
    check_unit(norm(v));
    const double eps = epsilon_pairwise(cfg);
    const Vec3& x = cfg[static_cast<std::size_t>(k - 1)];
    if (std::abs(dot(x, v)) > unit_tolerance) throw std::invalid_argument("direction is not tangent at x_k");
    const double c = std::cos(eps), s = std::sin(eps);
    SphereConfig out;
    out.reserve(cfg.size() + 1);
    out.push_back({c * x[0] + s * v[0], c * x[1] + s * v[1], c * x[2] + s * v[2]});
    out.insert(out.end(), cfg.begin(), cfg.end());
    return out;
}

// v is a unit tangent vector at the north pole, given by its (x, y) part.
inline PlanarConfig add_at_infinity(const PlanarConfig& cfg, const Vec2& v) {
    check_unit(norm(v));
    const double eps = epsilon_infinity(cfg);
    const Vec3 q{v[0] * std::sin(eps), v[1] * std::sin(eps), std::cos(eps)};
    PlanarConfig out;
    out.reserve(cfg.size() + 1);
    out.push_back(project(q));
    out.insert(out.end(), cfg.begin(), cfg.end());
    return out;
}

// Exact planar mode. Coordinates of the added point live in Q(sqrt D), where
// D is the minimal squared distance of the input; numbers are r + c*sqrt(D).
struct Surd {
    mpq_class rational, coefficient, radicand;

    double to_double() const {
        return rational.get_d() + coefficient.get_d() * std::sqrt(radicand.get_d());
    }
    friend bool operator==(const Surd& x, const Surd& y) {
        if (x.radicand != y.radicand && x.coefficient != 0 && y.coefficient != 0)
            throw std::invalid_argument("surds with different radicands");
        return x.rational == y.rational && x.coefficient == y.coefficient;
    }
};

// Sign of r + c*sqrt(D) with D > 0 not a rational square.
inline int sign(const Surd& s) {
    const int sr = sgn(s.rational), sc = sgn(s.coefficient);
    if (sc == 0) return sr;
    if (sr == 0 || sr == sc) return sr == 0 ? sc : sr;
    mpq_class lhs = s.rational * s.rational, rhs = s.coefficient * s.coefficient * s.radicand;
    return cmp(lhs, rhs) > 0 ? sr : (cmp(lhs, rhs) < 0 ? sc : 0);
}

using QPoint = std::array<mpq_class, 2>;
using SurdPoint = std::array<Surd, 2>;

struct ExactAddition {
    SurdPoint added;
    std::vector<QPoint> input;
    mpq_class min_sq_distance;  // D; epsilon = sqrt(D) / 2
};

inline mpq_class min_sq_distance(const std::vector<QPoint>& cfg) {
    if (cfg.size() < 2) throw std::invalid_argument("need at least two points");
    mpq_class best = -1;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j) {
            mpq_class dx = cfg[i][0] - cfg[j][0], dy = cfg[i][1] - cfg[j][1];
            mpq_class d = dx * dx + dy * dy;
            if (d == 0) throw std::invalid_argument("configuration points coincide");
            if (best < 0 || d < best) best = d;
        }
    return best;
}

// Rational square root when it exists.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    mpz_class num = q.get_num(), den = q.get_den();
    if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

inline ExactAddition add_near_k_exact(const std::vector<QPoint>& cfg, int k, const QPoint& v) {
    if (k < 1 || k > static_cast<int>(cfg.size())) throw std::out_of_range("k out of range");
    if (v[0] * v[0] + v[1] * v[1] != 1) throw std::invalid_argument("direction is not exactly unit length");
    ExactAddition out;
    out.input = cfg;
    out.min_sq_distance = min_sq_distance(cfg);
    const QPoint& x = cfg[static_cast<std::size_t>(k - 1)];
    const mpq_class half(1, 2);
    for (int c = 0; c < 2; ++c) {
        if (auto root = rational_sqrt(out.min_sq_distance))
            out.added[c] = Surd{x[c] + half * *root * v[c], 0, 1};
        else
            out.added[c] = Surd{x[c], half * v[c], out.min_sq_distance};
    }
    return out;
}

// Exact comparison of squared distances from the added point to x_k and to x_j:
// returns sign(|p - x_j|^2 - |p - x_k|^2).
inline int compare_to_neighbors(const ExactAddition& e, int k, int j) {
    const SurdPoint& p = e.added;
    auto sq = [&](const QPoint& q) {
        // (r + c s - q)^2 summed over coordinates, where s = sqrt(D) or 1
        Surd acc{0, 0, p[0].radicand};
        for (int t = 0; t < 2; ++t) {
            mpq_class r = p[t].rational - q[t], c = p[t].coefficient;
            acc.rational += r * r + c * c * p[t].radicand;
            acc.coefficient += 2 * r * c;
        }
        return acc;
    };
    Surd dj = sq(e.input[static_cast<std::size_t>(j - 1)]);
    Surd dk = sq(e.input[static_cast<std::size_t>(k - 1)]);
    return sign(Surd{dj.rational - dk.rational, dj.coefficient - dk.coefficient, dj.radicand});
}

inline bool coincides(const SurdPoint& p, const QPoint& q) {
    return p[0] == Surd{q[0], 0, p[0].radicand} && p[1] == Surd{q[1], 0, p[1].radicand};
}

}  // namespace braidsec::geo
