// JSON documents for curves, section specs, obstruction inputs, point
// configurations and verdicts.
#pragma once

#include <json.hpp>

#include "braidsec/cohomology.hpp"
#include "braidsec/curve.hpp"
#include "braidsec/geometry.hpp"
#include "braidsec/section.hpp"

#include <chrono>
#include <string>

namespace braidsec::io {

using nlohmann::json;

inline json round_spec_to_json(const RoundCurveSpec& s) {
    return {{"n", s.n}, {"type", "round"}, {"subset", s.subset}};
}

inline RoundCurveSpec round_spec_from_json(const json& j) {
    RoundCurveSpec s{j.at("n").get<int>(), j.at("subset").get<std::vector<int>>()};
    s.validate();
    return s;
}

inline json curve_to_json(const Curve& c) {
    if (const auto* r = std::get_if<RoundSource>(&c.source())) return round_spec_to_json(r->spec);
    if (const auto* im = std::get_if<ImageSource>(&c.source()))
        return {{"n", c.punctures()},
                {"type", "image"},
                {"base", round_spec_to_json(im->base)},
                {"conjugator", letters_to_string(im->conjugator)}};
    std::vector<std::string> flat;
    for (const auto& v : c.flat_coords()) flat.push_back(v.get_str());
    return {{"n", c.punctures()}, {"type", "coords"}, {"coords", flat}};
}

// Accepts a bare letter list or the "n=<k>; ..." form.
inline BraidWord braid_from_text(int n, const std::string& text) {
    if (text.find(';') != std::string::npos) {
        BraidWord u = parse_braid(text);
        if (u.strands != n) throw std::invalid_argument("conjugator strand count does not match the curve");
        return u;
    }
    return BraidWord(n, parse_letters(text));
}

inline dyn::Int big_int_from_json(const json& v) {
    if (v.is_number_integer()) return dyn::Int(std::to_string(v.get<long long>()));
    dyn::Int out;
    if (!v.is_string() || out.set_str(v.get<std::string>(), 10) != 0)
        throw std::invalid_argument("expected an integer or a decimal string");
    return out;
}

inline Curve curve_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const std::string type = j.at("type").get<std::string>();
    if (type == "round") return round_curve(round_spec_from_json(j));
    if (type == "image") {
        RoundCurveSpec base = round_spec_from_json(j.at("base"));
        if (base.n != n) throw std::invalid_argument("base curve lives on a different disk");
        return image_curve(base, braid_from_text(n, j.at("conjugator").get<std::string>()));
    }
    if (type == "coords") {
        std::vector<dyn::Int> flat;
        for (const auto& v : j.at("coords")) flat.push_back(big_int_from_json(v));
        return curve_from_coords(n, flat);
    }
    throw std::invalid_argument("unknown curve type '" + type + "'");
}

inline json section_spec_to_json(const SectionSpec& s) {
    json w = json::array();
    for (const auto& p : s.weights) w.push_back({{"i", p.i}, {"j", p.j}, {"w", p.w}});
    json out{{"n", s.n}, {"kind", s.kind == SectionKind::NearK ? "near_k" : "infinity"}, {"weights", w}};
    if (s.kind == SectionKind::NearK) out["k"] = s.k;
    return out;
}

inline SectionSpec section_spec_from_json(const json& j) {
    SectionSpec s;
    s.n = j.at("n").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "near_k") {
        s.kind = SectionKind::NearK;
        s.k = j.at("k").get<int>();
    } else if (kind == "infinity") {
        s.kind = SectionKind::Infinity;
    } else {
        throw std::invalid_argument("unknown section kind '" + kind + "'");
    }
    if (j.contains("weights"))
        for (const auto& p : j.at("weights")) s.weights.push_back({p.at("i").get<int>(), p.at("j").get<int>(), p.at("w").get<long>()});
    s.validate();
    return s;
}

inline linalg::Q rational_from_json(const json& v) {
    if (v.is_number_integer()) return linalg::Q(std::to_string(v.get<long long>()));
    linalg::Q q;
    if (!v.is_string() || q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("expected a rational such as 3 or \"-2/5\"");
    q.canonicalize();
    return q;
}

struct ObstructionInput {
    int g = 0, n = 0;
    coh::FStar fstar;
    std::string preset;  // empty when an explicit matrix was given
};

// The three scenarios of the genus > 1 argument. case1b puts f*a_1 = a_1 + 3 b_1
// on the first factor.
inline coh::FStar obstruction_preset(const std::string& name, int g, int n) {
    if (name == "case1a") return coh::preset_zero(g, n);
    if (name == "case1b") {
        std::vector<linalg::Q> x(2 * g, 0);
        x[0] = 1;
        x[g] = 3;
        return coh::preset_rank_one(g, n, x, 1);
    }
    if (name == "case2") return coh::preset_projection(g, n, 1);
    throw std::invalid_argument("unknown obstruction preset '" + name + "'");
}

inline ObstructionInput obstruction_from_json(const json& j) {
    ObstructionInput in;
    in.g = j.at("g").get<int>();
    in.n = j.at("n").get<int>();
    if (j.contains("preset")) {
        in.preset = j.at("preset").get<std::string>();
        in.fstar = obstruction_preset(in.preset, in.g, in.n);
    } else {
        const json& f = j.at("fstar");
        for (const auto& row : f.at("matrix")) {
            std::vector<linalg::Q> r;
            for (const auto& v : row) r.push_back(rational_from_json(v));
            in.fstar.matrix.push_back(std::move(r));
        }
        in.fstar.omega_scale = f.contains("omega") ? rational_from_json(f.at("omega")) : linalg::Q(1);
        coh::validate(in.fstar, in.g, in.n);
    }
    return in;
}

// Point configurations. Planar points given as strings are read exactly.
struct ConfigInput {
    bool sphere = false;
    bool exact = false;
    geo::PlanarConfig plane;
    geo::SphereConfig sphere_points;
    std::vector<geo::QPoint> plane_exact;
};

inline ConfigInput config_from_json(const json& j) {
    ConfigInput c;
    const std::string space = j.at("space").get<std::string>();
    if (space != "plane" && space != "sphere") throw std::invalid_argument("space must be plane or sphere");
    c.sphere = space == "sphere";
    const json& pts = j.at("points");
    if (!pts.is_array() || pts.empty()) throw std::invalid_argument("points must be a non-empty array");
    c.exact = !c.sphere && pts[0].is_array() && !pts[0].empty() && pts[0][0].is_string();
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != (c.sphere ? 3u : 2u)) throw std::invalid_argument("point has wrong dimension");
        if (c.sphere)
            c.sphere_points.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
        else if (c.exact)
            c.plane_exact.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
        else
            c.plane.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    if (c.sphere) geo::check_sphere_config(c.sphere_points);
    return c;
}

inline json config_to_json(const geo::PlanarConfig& cfg) {
    json pts = json::array();
    for (const auto& p : cfg) pts.push_back({p[0], p[1]});
    return {{"space", "plane"}, {"points", pts}};
}

inline json config_to_json(const geo::SphereConfig& cfg) {
    json pts = json::array();
    for (const auto& p : cfg) pts.push_back({p[0], p[1], p[2]});
    return {{"space", "sphere"}, {"points", pts}};
}

inline std::string surd_to_string(const geo::Surd& s) {
    if (s.coefficient == 0) return s.rational.get_str();
    std::string out = s.rational == 0 ? "" : s.rational.get_str() + (s.coefficient > 0 ? "+" : "");
    return out + s.coefficient.get_str() + "*sqrt(" + s.radicand.get_str() + ")";
}

enum class Status { Verified, Refuted, Inconclusive, Error };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Refuted: return "refuted";
        case Status::Inconclusive: return "inconclusive";
        case Status::Error: return "error";
    }
    return "error";
}

struct Verdict {
    std::string claim;
    Status status = Status::Inconclusive;
    json witness = json::object();
    double seconds = 0;

    json to_json() const {
        return {{"claim", claim},
                {"status", to_string(status)},
                {"verified", status == Status::Verified},
                {"witness", witness},
                {"timing", {{"seconds", seconds}}}};
    }
};

// Runs body(verdict) and records wall time.
template <class Body>
Verdict timed(std::string claim, Body&& body) {
    Verdict v;
    v.claim = std::move(claim);
    const auto start = std::chrono::steady_clock::now();
    body(v);
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

}  // namespace braidsec::io
