// Command-line front end. Every subcommand prints one verdict document:
// {"claim", "status", "verified", "witness", "timing"}.
// Exit codes: 0 verified or computed, 1 refuted or inconclusive, 2 bad input.

#include "braidsec/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace braidsec;
using io::json;
using io::Status;
using io::Verdict;

namespace {

struct Options {
    int n = 0;
    int g = 2;
    int k = 0;
    long i = 0;
    bool infinity = false;
    std::string word, curve, spec, preset, direction, svg;
    unsigned seed = 1;
    int samples = 100;
    bool compact = false, quiet = false, paper_suite = false;
};

// Inline JSON when the text starts with a bracket, otherwise a file path.
json load_json(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return json::parse(text);
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot read '" + text + "'");
    return json::parse(in);
}

std::vector<Curve> load_curves(const std::string& text, std::size_t expected) {
    if (text.empty()) throw std::invalid_argument("--curve is required");
    json j = load_json(text);
    if (!j.is_array() || j.size() != expected)
        throw std::invalid_argument("--curve must be a JSON array of " + std::to_string(expected) + " curves");
    std::vector<Curve> out;
    for (const auto& c : j) out.push_back(io::curve_from_json(c));
    return out;
}

std::vector<double> parse_direction(const std::string& text) {
    std::vector<double> v;
    if (text.find('/') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(io::rational_from_json(tok).get_d());
        return v;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad direction component '" + tok + "'");
        }
    }
    return v;
}

void write_svg(const std::string& path, const std::vector<std::array<double, 2>>& before,
               const std::vector<std::array<double, 2>>& after) {
    double lo = 0, hi = 0;
    for (const auto* cfg : {&before, &after})
        for (const auto& p : *cfg) lo = std::min({lo, p[0], p[1]}), hi = std::max({hi, p[0], p[1]});
    const double pad = 0.1 * (hi - lo) + 1e-9, span = hi - lo + 2 * pad;
    auto sx = [&](double x) { return 400 * (x - lo + pad) / span; };
    auto sy = [&](double y) { return 400 - 400 * (y - lo + pad) / span; };
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\">\n";
    for (const auto& p : before)
        out << "<circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"4\" fill=\"black\"/>\n";
    if (!after.empty())
        out << "<circle cx=\"" << sx(after[0][0]) << "\" cy=\"" << sy(after[0][1])
            << "\" r=\"4\" fill=\"none\" stroke=\"red\"/>\n";
    out << "</svg>\n";
}

Verdict geo_add(const Options& o) {
    if (o.spec.empty()) throw std::invalid_argument("--spec with a configuration is required");
    const io::ConfigInput cfg = io::config_from_json(load_json(o.spec));
    const std::vector<double> dir = parse_direction(o.direction);
    if (o.infinity == (o.k != 0)) throw std::invalid_argument("give exactly one of --k and --infinity");
    return io::timed("added point keeps the configuration distinct and deletes back to the input", [&](Verdict& v) {
        if (cfg.sphere) {
            if (o.infinity) throw std::invalid_argument("the sphere has no distinguished point at infinity");
            if (dir.size() != 3) throw std::invalid_argument("sphere directions have three components");
            auto out = geo::add_near_k(cfg.sphere_points, o.k, {dir[0], dir[1], dir[2]});
            bool distinct = true;
            for (std::size_t j = 1; j < out.size(); ++j) distinct &= geo::spherical_distance(out[0], out[j]) > 0;
            const bool retracts = geo::SphereConfig(out.begin() + 1, out.end()) == cfg.sphere_points;
            v.status = distinct && retracts ? Status::Verified : Status::Refuted;
            v.witness = {{"epsilon", geo::epsilon_pairwise(cfg.sphere_points)},
                         {"output", io::config_to_json(out)},
                         {"distinct", distinct},
                         {"retracts", retracts}};
            return;
        }
        if (dir.size() != 2) throw std::invalid_argument("planar directions have two components");
        if (cfg.exact) {
            if (o.infinity) throw std::invalid_argument("the point at infinity needs double precision input");
            // exact directions are read as rationals such as 3/5
            geo::QPoint vq;
            std::stringstream ss(o.direction);
            std::string tok;
            for (int c = 0; c < 2 && std::getline(ss, tok, ','); ++c) vq[c] = io::rational_from_json(tok);
            auto e = geo::add_near_k_exact(cfg.plane_exact, o.k, vq);
            bool distinct = true;
            for (const auto& p : e.input) distinct &= !geo::coincides(e.added, p);
            v.status = distinct ? Status::Verified : Status::Refuted;
            v.witness = {{"min_squared_distance", e.min_sq_distance.get_str()},
                         {"added", {io::surd_to_string(e.added[0]), io::surd_to_string(e.added[1])}},
                         {"distinct", distinct},
                         {"retracts", true}};
            return;
        }
        const geo::Vec2 d{dir[0], dir[1]};
        auto out = o.infinity ? geo::add_at_infinity(cfg.plane, d) : geo::add_near_k(cfg.plane, o.k, d);
        bool distinct = true;
        for (std::size_t j = 1; j < out.size(); ++j) distinct &= out[j] != out[0];
        const bool retracts = geo::PlanarConfig(out.begin() + 1, out.end()) == cfg.plane;
        v.status = distinct && retracts ? Status::Verified : Status::Refuted;
        v.witness = {{"epsilon", o.infinity ? geo::epsilon_infinity(cfg.plane) : geo::epsilon_pairwise(cfg.plane)},
                     {"output", io::config_to_json(out)},
                     {"distinct", distinct},
                     {"retracts", retracts}};
        if (!o.svg.empty()) write_svg(o.svg, cfg.plane, out);
    });
}

Verdict paper_suite(const Options& o) {
    if (!o.paper_suite) throw std::invalid_argument("run-all needs --paper-suite");
    return io::timed("every preset identity and obstruction", [&](Verdict& v) {
        auto all = report::paper_suite(o.seed, o.samples);
        json list = json::array();
        int passed = 0;
        for (const auto& x : all) {
            passed += x.status == Status::Verified;
            list.push_back(x.to_json());
        }
        v.status = passed == static_cast<int>(all.size()) ? Status::Verified : Status::Refuted;
        v.witness = {{"passed", passed}, {"total", all.size()}, {"verdicts", list}};
    });
}

Verdict lantern(const Options& o) {
    if (!o.preset.empty()) {
        const auto& p = report::lantern_preset(o.preset);
        return report::lantern_verdict(p, o.n ? o.n : p.min_strands);
    }
    // Custom lantern: {"x": curve, "y": curve, "z": curve, "boundary": [curve or null] x4}
    if (o.curve.empty()) throw std::invalid_argument("give --preset or --curve");
    json j = load_json(o.curve);
    Curve x = io::curve_from_json(j.at("x")), y = io::curve_from_json(j.at("y")), z = io::curve_from_json(j.at("z"));
    const json& b = j.at("boundary");
    if (!b.is_array() || b.size() != 4) throw std::invalid_argument("boundary must list four entries");
    std::array<LanternBoundary, 4> bd;
    for (std::size_t s = 0; s < 4; ++s)
        if (!b[s].is_null()) bd[s] = io::curve_from_json(b[s]);
    return report::lantern_verdict(x.punctures(), x, y, z, bd);
}

int emit(const Verdict& v, const Options& o) {
    if (o.quiet)
        std::cout << v.witness.dump() << "\n";
    else
        std::cout << v.to_json().dump(o.compact ? -1 : 2) << "\n";
    return v.status == Status::Verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid, curve, section and obstruction verifiers"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", o.compact, "Single-line JSON output");
        s->add_flag("--quiet", o.quiet, "Print only the witness");
    };
    auto* wp = app.add_subcommand("word-problem", "Decide whether a braid word is trivial");
    wp->add_option("--n", o.n, "Strand count")->required()->check(CLI::PositiveNumber);
    wp->add_option("--word", o.word, "Space-separated signed generator indices")->required();
    auto* lan = app.add_subcommand("verify-lantern", "Check a lantern relation");
    lan->add_option("--preset", o.preset, "paper-case1, paper-case2 or paper-case3");
    lan->add_option("--n", o.n, "Strand count (embeds the preset)");
    lan->add_option("--curve", o.curve, "Custom lantern as JSON or a JSON file");
    auto* inter = app.add_subcommand("intersect", "Geometric intersection number of two curves");
    inter->add_option("--curve", o.curve, "JSON array of two curves")->required();
    auto* tc = app.add_subcommand("twist-commute", "Compare disjointness with twist commutation");
    tc->add_option("--curve", o.curve, "JSON array of two curves")->required();
    auto* tr = app.add_subcommand("trace-classify", "Trace and type of T_a T_b from i(a,b)");
    tr->add_option("--n,-i", o.i, "Intersection number")->required()->check(CLI::NonNegativeNumber);
    auto* sv = app.add_subcommand("section-verify", "Verify an algebraic section");
    sv->add_option("--spec", o.spec, "Section spec as JSON or a JSON file")->required();
    sv->add_option("--samples", o.samples, "Random homomorphism pairs")->check(CLI::NonNegativeNumber);
    sv->add_option("--seed", o.seed, "Random seed");
    auto* co = app.add_subcommand("cohomology-obstruction", "Closed-surface section obstruction");
    co->add_option("--spec", o.spec, "Obstruction input as JSON or a JSON file");
    co->add_option("--preset", o.preset, "case1a, case1b or case2");
    co->add_option("--g", o.g, "Genus for presets")->check(CLI::Range(2, 12));
    co->add_option("--n", o.n, "Point count for presets");
    auto* h2 = app.add_subcommand("sphere-h2", "Invariant factors of H^2(PConf_n(S^2); Z)");
    h2->add_option("--n", o.n, "Point count")->required()->check(CLI::Range(2, 64));
    auto* geo_cmd = app.add_subcommand("geo-add", "Add a point near x_k or near infinity");
    geo_cmd->add_option("--spec", o.spec, "Configuration JSON or file")->required();
    geo_cmd->add_option("--k", o.k, "Index of the point to flow from");
    geo_cmd->add_flag("--infinity", o.infinity, "Flow from the point at infinity");
    geo_cmd->add_option("--direction", o.direction, "Unit direction, comma separated")->required();
    geo_cmd->add_option("--svg", o.svg, "Write a before/after SVG figure");
    auto* all = app.add_subcommand("run-all", "Run every preset");
    all->add_flag("--paper-suite", o.paper_suite, "Run the full preset suite");
    all->add_option("--samples", o.samples, "Random homomorphism pairs per section")->check(CLI::NonNegativeNumber);
    all->add_option("--seed", o.seed, "Random seed");
    for (auto* s : {wp, lan, inter, tc, tr, sv, co, h2, geo_cmd, all}) common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Verdict v;
        if (*wp) v = report::word_problem_verdict(BraidWord(o.n, parse_letters(o.word)));
        else if (*lan) v = lantern(o);
        else if (*inter) {
            auto c = load_curves(o.curve, 2);
            v = report::intersect_verdict(c[0], c[1]);
        } else if (*tc) {
            auto c = load_curves(o.curve, 2);
            v = report::twist_commute_verdict(c[0], c[1]);
        } else if (*tr) v = report::trace_verdict(o.i);
        else if (*sv) v = report::section_verdict(io::section_spec_from_json(load_json(o.spec)), o.samples, o.seed);
        else if (*co) {
            io::ObstructionInput in;
            if (!o.spec.empty()) in = io::obstruction_from_json(load_json(o.spec));
            else if (!o.preset.empty()) {
                if (o.n < 2) throw std::invalid_argument("presets need --n >= 2");
                in = {o.g, o.n, io::obstruction_preset(o.preset, o.g, o.n), o.preset};
            } else throw std::invalid_argument("give --spec or --preset");
            v = report::obstruction_verdict(in);
        } else if (*h2) v = report::sphere_h2_verdict(o.n);
        else if (*geo_cmd) v = geo_add(o);
        else v = paper_suite(o);
        return emit(v, o);
    } catch (const std::exception& e) {
        Verdict v;
        v.claim = "input accepted";
        v.status = Status::Error;
        v.witness = {{"message", e.what()}};
        std::cerr << "error: " << e.what() << "\n";
        std::cout << v.to_json().dump(o.compact ? -1 : 2) << "\n";
        return 2;
    }
}
