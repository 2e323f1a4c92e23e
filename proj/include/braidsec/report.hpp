// Verdict builders shared by the command-line tool and the acceptance run.
#pragma once

#include "braidsec/io.hpp"
#include "braidsec/twist.hpp"

#include <random>
#include <string>
#include <vector>

namespace braidsec::report {

using io::json;
using io::Status;
using io::Verdict;

struct LanternPreset {
    std::string name;
    std::string identity;
    int min_strands = 3;
    std::vector<int> x, y, z;
    std::array<std::vector<int>, 4> boundary;  // singletons stand for punctures
};

inline const std::vector<LanternPreset>& lantern_presets() {
    static const std::vector<LanternPreset> presets = {
        {"paper-case1", "A12 A23 A13 = A123", 3, {1, 2}, {2, 3}, {1, 3}, {{{1}, {2}, {3}, {1, 2, 3}}}},
        {"paper-case2", "A13 A34 A14 = A134", 4, {1, 3}, {3, 4}, {1, 4}, {{{1}, {3}, {4}, {1, 3, 4}}}},
        {"paper-case3", "A123 A34 A124 = A12 A1234", 4, {1, 2, 3}, {3, 4}, {1, 2, 4}, {{{1, 2}, {3}, {4}, {1, 2, 3, 4}}}},
    };
    return presets;
}

inline const LanternPreset& lantern_preset(const std::string& name) {
    for (const auto& p : lantern_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown lantern preset '" + name + "'");
}

inline LanternReport run_lantern(const LanternPreset& p, int n) {
    if (n < p.min_strands) throw std::invalid_argument(p.name + " needs at least " + std::to_string(p.min_strands) + " strands");
    std::array<LanternBoundary, 4> bd;
    for (std::size_t s = 0; s < 4; ++s)
        if (p.boundary[s].size() > 1) bd[s] = round_curve(n, p.boundary[s]);
    return verify_lantern(n, round_curve(n, p.x), round_curve(n, p.y), round_curve(n, p.z), bd);
}

inline Verdict lantern_verdict(const LanternPreset& p, int n) {
    return io::timed(p.identity + " in PB" + std::to_string(n), [&](Verdict& v) {
        LanternReport r = run_lantern(p, n);
        v.status = r.verified() ? Status::Verified : Status::Refuted;
        v.witness = {{"configuration_ok", r.configuration_ok},
                     {"linking_agrees", r.linking_agrees},
                     {"identity_holds", r.identity_holds},
                     {"lhs", to_text(r.lhs)},
                     {"rhs", to_text(r.rhs)}};
        if (!r.configuration_ok) v.witness["configuration_note"] = r.configuration_note;
    });
}

inline Verdict lantern_verdict(int n, const Curve& x, const Curve& y, const Curve& z,
                               const std::array<LanternBoundary, 4>& bd) {
    return io::timed("custom lantern in PB" + std::to_string(n), [&](Verdict& v) {
        LanternReport r = verify_lantern(n, x, y, z, bd);
        v.status = r.verified() ? Status::Verified : Status::Refuted;
        v.witness = {{"configuration_ok", r.configuration_ok},
                     {"linking_agrees", r.linking_agrees},
                     {"identity_holds", r.identity_holds}};
        if (!r.configuration_ok) v.witness["configuration_note"] = r.configuration_note;
    });
}

inline json matrix_to_json(const LinkingMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline Verdict word_problem_verdict(const BraidWord& u) {
    return io::timed("braid word is trivial in B" + std::to_string(u.strands), [&](Verdict& v) {
        const Permutation perm = permutation_of(u);
        const LinkingMatrix cross = crossing_matrix(u);
        const bool filters_pass = perm.is_identity() && cross == LinkingMatrix(u.strands);
        const bool trivial = is_identity(u);
        v.status = trivial ? Status::Verified : Status::Refuted;
        v.witness = {{"word", to_text(u)},
                     {"permutation", perm.image},
                     {"crossing_matrix", matrix_to_json(cross)},
                     {"prefilters_pass", filters_pass},
                     {"trivial", trivial}};
    });
}

inline Verdict intersect_verdict(const Curve& x, const Curve& y) {
    return io::timed("geometric intersection number", [&](Verdict& v) {
        v.status = Status::Verified;
        v.witness = {{"intersection", geometric_intersection(x, y).get_str()},
                     {"isotopic", is_isotopic(x, y)},
                     {"a", io::curve_to_json(x)},
                     {"b", io::curve_to_json(y)}};
    });
}

inline Verdict twist_commute_verdict(const Curve& x, const Curve& y) {
    return io::timed("twists commute exactly when the curves are disjoint", [&](Verdict& v) {
        const dyn::Int i = geometric_intersection(x, y);
        const bool c = commute(twist_word(x), twist_word(y));
        v.status = (i == 0) == c ? Status::Verified : Status::Refuted;
        v.witness = {{"intersection", i.get_str()}, {"commute", c}};
    });
}

inline Verdict trace_verdict(long i) {
    return io::timed("trace of rho(T_a T_b) is 2 - i^2 for i = " + std::to_string(i), [&](Verdict& v) {
        const ProductClassification pc = classify_product_type(i);
        const mpz_class expect = 2 - mpz_class(i) * i;
        v.status = pc.trace == expect ? Status::Verified : Status::Refuted;
        v.witness = {{"i", i}, {"trace", pc.trace.get_str()}, {"type", to_string(pc.type)}};
    });
}

inline Verdict section_verdict(const SectionSpec& spec, int samples, unsigned seed) {
    return io::timed("section splits forgetting the added strand", [&](Verdict& v) {
        SectionReport r = verify_section(spec, samples, seed);
        v.status = r.verified() ? Status::Verified : Status::Refuted;
        v.witness = {{"spec", io::section_spec_to_json(spec)},
                     {"generators", r.generators.size()},
                     {"retraction", r.retraction_ok()},
                     {"preserves_curve", r.curve_ok()},
                     {"twist_centralizes", r.centralizer_ok()},
                     {"homomorphism_samples", r.homomorphism_samples},
                     {"homomorphism_failures", r.homomorphism_failures},
                     {"failures", r.failures}};
    });
}

inline Verdict obstruction_verdict(const io::ObstructionInput& in) {
    std::string claim = "no section of PConf_" + std::to_string(in.n + 1) + "(S_" + std::to_string(in.g) +
                        ") -> PConf_" + std::to_string(in.n) + " with this f*";
    return io::timed(claim, [&](Verdict& v) {
        coh::ObstructionVerdict r = coh::obstruction_closed_surface(in.g, in.n, in.fstar);
        v.status = r.verdict == coh::Verdict::NoSection ? Status::Verified : Status::Inconclusive;
        json tests = json::array();
        for (const auto& t : r.tests)
            tests.push_back({{"i", t.index}, {"class", t.value.to_string()}, {"in_diagonal_span", t.in_span}});
        v.witness = {{"g", in.g}, {"n", in.n}, {"verdict", coh::to_string(r.verdict)}, {"tests", tests}};
        if (!in.preset.empty()) v.witness["preset"] = in.preset;
        if (r.witness) v.witness["witness"] = {{"i", r.witness->index}, {"class", r.witness->value.to_string()}};
    });
}

inline Verdict sphere_h2_verdict(int n) {
    return io::timed("H^2(PConf_" + std::to_string(n) + "(S^2); Z) invariant factors", [&](Verdict& v) {
        v.status = Status::Verified;
        json factors = json::array();
        for (const auto& z : coh::h2_pconf_sphere(n)) factors.push_back(z.get_si());
        v.witness = {{"invariant_factors", factors}};
    });
}

inline Verdict euler_verdict(int n, int k) {
    return io::timed("2 p_" + std::to_string(k) + "^*[S^2] = 0 in H^2(PConf_" + std::to_string(n) + "(S^2))",
                     [&](Verdict& v) {
                         coh::EulerWitness w = coh::euler_class_vanishes_sphere(n, k);
                         v.status = w.vanishes ? Status::Verified : Status::Refuted;
                         json comb = json::array();
                         for (const auto& [ij, c] : w.combination)
                             comb.push_back({{"i", ij.first}, {"j", ij.second}, {"coefficient", c.get_str()}});
                         v.witness = {{"combination", comb}};
                     });
}

inline Verdict s2k_verdict(int k) {
    return io::timed("no section of PConf_3(S^" + std::to_string(2 * k) + ") -> PConf_2", [&](Verdict& v) {
        coh::SphereConstraints s = coh::s2k_section_constraints(k);
        v.status = s.verdict == coh::Verdict::NoSection ? Status::Verified : Status::Inconclusive;
        v.witness = {{"constraints", s.rendered()}, {"satisfiable", s.satisfiable}};
    });
}

// Every identity and obstruction scenario in one run.
inline std::vector<Verdict> paper_suite(unsigned seed, int samples) {
    std::vector<Verdict> out;
    for (const auto& p : lantern_presets()) {
        out.push_back(lantern_verdict(p, p.min_strands));
        if (p.name == "paper-case1") out.push_back(lantern_verdict(p, 4));
        if (p.name == "paper-case3")
            for (int n : {5, 6}) out.push_back(lantern_verdict(p, n));
    }
    for (long i = 1; i <= 10; ++i) out.push_back(trace_verdict(i));
    std::mt19937 rng(seed);
    for (int n = 4; n <= 6; ++n)
        for (SectionKind kind : {SectionKind::NearK, SectionKind::Infinity}) {
            SectionSpec s;
            s.n = n;
            s.kind = kind;
            s.k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            std::uniform_int_distribution<long> w(-3, 3);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) s.weights.push_back({i, j, w(rng)});
            out.push_back(section_verdict(s, samples, seed));
        }
    for (const char* preset : {"case1a", "case1b", "case2"})
        for (int g : {2, 3})
            for (int n : {2, 3, 4}) {
                io::ObstructionInput in{g, n, io::obstruction_preset(preset, g, n), preset};
                out.push_back(obstruction_verdict(in));
            }
    for (int n = 3; n <= 8; ++n) out.push_back(sphere_h2_verdict(n));
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) out.push_back(euler_verdict(n, k));
    for (int k = 1; k <= 5; ++k) out.push_back(s2k_verdict(k));
    return out;
}

}  // namespace braidsec::report
