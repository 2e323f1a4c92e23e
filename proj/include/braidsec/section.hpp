// Candidate sections PB_n -> PB_{n+1}: doubling a strand or adding a strand
// at the boundary, each twisted by a weight homomorphism PB_n -> Z.
#pragma once

#include "braidsec/braid.hpp"
#include "braidsec/curve.hpp"
#include "braidsec/twist.hpp"

#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidsec {

enum class SectionKind { NearK, Infinity };

struct PairWeight {
    int i = 0, j = 0;
    long w = 0;
};

struct SectionSpec {
    int n = 1;
    SectionKind kind = SectionKind::NearK;
    int k = 1;                        // doubled strand, NearK only
    std::vector<PairWeight> weights;  // unlisted pairs weigh zero

    void validate() const {
        if (n < 1) throw std::invalid_argument("section source needs at least one strand");
        if (kind == SectionKind::NearK && (k < 1 || k > n)) throw std::invalid_argument("k out of range");
        for (const auto& pw : weights)
            if (!(1 <= pw.i && pw.i < pw.j && pw.j <= n)) throw std::invalid_argument("weight pair out of range");
    }
    // Index of the added strand in the target braid group.
    int new_strand() const { return kind == SectionKind::NearK ? k : n + 1; }
};

// Replaces strand k by two parallel strands; the new one sits immediately to
// the left and takes index k.
inline BraidWord cable_strand(const BraidWord& u, int k) {
    if (k < 1 || k > u.strands) throw std::out_of_range("strand index out of range");
    if (!is_pure(u)) throw std::invalid_argument("cabling needs a pure braid");
    std::vector<int> rev;  // emitted right to left
    int p = k;             // current position of the doubled strand, old indexing
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
        const int i = std::abs(*it);
        const int s = *it > 0 ? 1 : -1;
        if (i + 1 < p) {
            rev.push_back(s * i);
        } else if (i > p) {
            rev.push_back(s * (i + 1));
        } else if (i == p) {
            // pair at i, i+1 passes the strand at i+2: sigma_i sigma_{i+1}
            rev.push_back(s * (i + 1));
            rev.push_back(s * i);
            p = i + 1;
        } else {
            // strand at i passes the pair at i+1, i+2: sigma_{i+1} sigma_i
            rev.push_back(s * i);
            rev.push_back(s * (i + 1));
            p = i;
        }
    }
    return BraidWord(u.strands + 1, std::vector<int>(rev.rbegin(), rev.rend()));
}

inline BraidWord include_new_strand(const BraidWord& u) {
    if (!is_pure(u)) throw std::invalid_argument("strand insertion needs a pure braid");
    return BraidWord(u.strands + 1, u.letters);
}

inline long weight_of(const SectionSpec& spec, const BraidWord& u) {
    const LinkingMatrix lk = linking_matrix(u);
    long phi = 0;
    for (const auto& pw : spec.weights) phi += pw.w * lk.at(pw.i, pw.j);
    return phi;
}

inline BraidWord twisting_element(const SectionSpec& spec) {
    const int m = spec.n + 1;
    if (spec.kind == SectionKind::NearK) return round_twist(m, {spec.k, spec.k + 1});
    std::vector<int> old(spec.n);
    std::iota(old.begin(), old.end(), 1);
    BraidWord tc = spec.n >= 2 ? round_twist(m, old) : BraidWord(m, {});
    BraidWord tb(m, full_twist_letters(1, m));
    return compose(tc, inverse(tb));
}

inline BraidWord section_base(const SectionSpec& spec, const BraidWord& u) {
    return spec.kind == SectionKind::NearK ? cable_strand(u, spec.k) : include_new_strand(u);
}

inline BraidWord apply_section(const SectionSpec& spec, const BraidWord& u) {
    spec.validate();
    if (u.strands != spec.n) throw std::invalid_argument("word and section have different strand counts");
    if (!is_pure(u)) throw std::invalid_argument("sections are defined on pure braids");
    return compose(section_base(spec, u), power(twisting_element(spec), weight_of(spec, u)));
}

inline Curve preserved_curve(const SectionSpec& spec) {
    spec.validate();
    if (spec.kind == SectionKind::NearK) return round_curve(spec.n + 1, {spec.k, spec.k + 1});
    std::vector<int> old(spec.n);
    std::iota(old.begin(), old.end(), 1);
    return round_curve(spec.n + 1, old);
}

// A random pure braid: product of Artin generators and their inverses,
// stopping before the letter count would exceed max_letters.
template <class Rng>
BraidWord random_pure_word(int n, std::size_t max_letters, Rng& rng) {
    BraidWord w(n, {});
    if (n < 2) return w;
    std::uniform_int_distribution<int> pick(1, n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int guard = 0; guard < 64; ++guard) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        BraidWord g = artin_generator(n, i, j);
        if (coin(rng)) g = inverse(g);
        if (w.length() + g.length() > max_letters) break;
        w = compose(w, g);
    }
    return w;
}

struct SectionReport {
    struct GeneratorCheck {
        int i = 0, j = 0;
        bool retraction = false;
        bool preserves_curve = false;
        bool twist_commutes = false;
    };
    std::vector<GeneratorCheck> generators;
    int homomorphism_samples = 0;
    int homomorphism_failures = 0;
    std::vector<std::string> failures;

    bool retraction_ok() const {
        return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.retraction; });
    }
    bool curve_ok() const {
        return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.preserves_curve; });
    }
    bool centralizer_ok() const {
        return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.twist_commutes; });
    }
    bool homomorphism_ok() const { return homomorphism_failures == 0; }
    bool verified() const { return retraction_ok() && curve_ok() && centralizer_ok() && homomorphism_ok(); }
};

// The map under test is injectable so that deliberately broken variants can
// serve as negative controls.
template <class SectionMap>
SectionReport verify_section_with(const SectionSpec& spec, int samples, unsigned seed, SectionMap&& map,
                                  std::size_t max_letters = 30) {
    spec.validate();
    SectionReport rep;
    const int target = spec.new_strand();
    const Curve keep = preserved_curve(spec);
    const BraidWord t = twisting_element(spec);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j) pairs.emplace_back(i, j);

    auto check_generator = [&](int i, int j) {
        SectionReport::GeneratorCheck g{i, j};
        const BraidWord a = artin_generator(spec.n, i, j);
        const BraidWord img = map(spec, a);
        g.retraction = is_pure(img) && equals(forget_strand(img, target), a);
        g.preserves_curve = act(img, keep) == keep;
        g.twist_commutes = commute(section_base(spec, a), t);
        return g;
    };
    std::vector<std::future<SectionReport::GeneratorCheck>> jobs;
    for (auto [i, j] : pairs) jobs.push_back(std::async(std::launch::async, check_generator, i, j));
    for (auto& f : jobs) rep.generators.push_back(f.get());
    for (const auto& g : rep.generators) {
        const std::string tag = "A" + std::to_string(g.i) + std::to_string(g.j);
        if (!g.retraction) rep.failures.push_back("retraction fails on " + tag);
        if (!g.preserves_curve) rep.failures.push_back("preserved curve moved by image of " + tag);
        if (!g.twist_commutes) rep.failures.push_back("twisting element does not commute with image of " + tag);
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        BraidWord u = random_pure_word(spec.n, max_letters, rng);
        BraidWord v = random_pure_word(spec.n, max_letters, rng);
        ++rep.homomorphism_samples;
        if (!equals(map(spec, compose(u, v)), compose(map(spec, u), map(spec, v)))) {
            ++rep.homomorphism_failures;
            if (rep.homomorphism_failures <= 3)
                rep.failures.push_back("homomorphism fails on u=\"" + letters_to_string(u.letters) + "\" v=\"" +
                                       letters_to_string(v.letters) + "\"");
        }
    }
    return rep;
}

inline SectionReport verify_section(const SectionSpec& spec, int samples, unsigned seed = 1) {
    return verify_section_with(spec, samples, seed,
                               [](const SectionSpec& s, const BraidWord& u) { return apply_section(s, u); });
}

}  // namespace braidsec
