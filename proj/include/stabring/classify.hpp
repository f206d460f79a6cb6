#ifndef STABRING_CLASSIFY_HPP
#define STABRING_CLASSIFY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lattice_ring.hpp"
#include "polytope.hpp"

namespace stabring {

enum class HPerfectStatus { Verified, Assumed, Refuted, Undecided };

inline const char* h_perfect_name(HPerfectStatus s) {
    switch (s) {
        case HPerfectStatus::Verified: return "verified";
        case HPerfectStatus::Assumed: return "assumed";
        case HPerfectStatus::Refuted: return "refuted";
        case HPerfectStatus::Undecided: return "undecided";
    }
    return "?";
}

// Exact Gorenstein verdict for the Ehrhart ring of the variant polytope,
// with a concrete witness on failure: either two family members of unequal
// size, or the offending hole.
struct GorensteinVerdict {
    bool value = false;
    std::vector<int> clique_a, clique_b;  // unequal-size family members
    std::vector<int> hole;                // offending chordless odd cycle
    std::string reason;
};

namespace detail {

// Lexicographically first family members of maximal and minimal size.
inline std::pair<std::vector<int>, std::vector<int>> size_gap_witness(const CliqueFamily& f) {
    std::vector<int> big, small;
    for (const auto& k : f.members) {
        if (big.empty() || k.size() > big.size()) big = k;
        if (small.empty() || k.size() < small.size()) small = k;
    }
    return {big, small};
}

inline std::vector<int> first_hole_of_length_at_least(const Graph& g, int len) {
    for (const auto& h : odd_holes(g).holes)
        if ((int)h.size() >= len) return h;
    return {};
}

}  // namespace detail

inline GorensteinVerdict gorenstein(const Graph& g, Variant variant) {
    GorensteinVerdict v;
    if (variant == Variant::QSTAB) {
        auto f = maximal_cliques(g);
        if (f.max_size() != f.min_size()) {
            auto [big, small] = detail::size_gap_witness(f);
            v.clique_a = big;
            v.clique_b = small;
            v.reason = "not pure: maximal cliques of sizes " + std::to_string(big.size()) +
                       " and " + std::to_string(small.size());
            return v;
        }
        v.value = true;
        return v;
    }

    if (variant == Variant::HSTAB) {
        auto f = maximal_cliques(g);
        if (f.max_size() != f.min_size()) {
            auto [big, small] = detail::size_gap_witness(f);
            v.clique_a = big;
            v.clique_b = small;
            v.reason = "not pure: maximal cliques of sizes " + std::to_string(big.size()) +
                       " and " + std::to_string(small.size());
            return v;
        }
        int omega = f.max_size();
        if (omega == 1) { v.value = true; return v; }
        int forbidden = omega == 2 ? 7 : 5;
        auto hole = detail::first_hole_of_length_at_least(g, forbidden);
        if (!hole.empty()) {
            v.hole = hole;
            v.reason = "clique number " + std::to_string(omega) +
                       " with a chordless odd cycle of length " + std::to_string(hole.size());
            return v;
        }
        v.value = true;
        return v;
    }

    // TSTAB. The three alternatives: no edges; or no isolated vertex and no
    // triangle and no hole of length >= 7; or every maximal clique has size
    // >= 3 and no hole of length >= 5.
    if (g.m() == 0) { v.value = true; return v; }
    auto kf = k_maximal_elements(g);
    if (kf.max_size() != kf.min_size()) {
        auto [big, small] = detail::size_gap_witness(kf);
        v.clique_a = big;
        v.clique_b = small;
        v.reason = "not t-pure: maximal size-<=3 cliques of sizes " + std::to_string(big.size()) +
                   " and " + std::to_string(small.size());
        return v;
    }
    int m = kf.max_size();  // common size; m == 1 is the edgeless case above
    int forbidden = m == 2 ? 7 : 5;
    auto hole = detail::first_hole_of_length_at_least(g, forbidden);
    if (!hole.empty()) {
        v.hole = hole;
        v.reason = "t-clique size " + std::to_string(m) +
                   " with a chordless odd cycle of length " + std::to_string(hole.size());
        return v;
    }
    v.value = true;
    return v;
}

// ---------------------------------------------------------------------------
// Gorenstein on the punctured spectrum.

enum class GpsVerdict { True, False, NecessaryOnly, Withheld };

inline const char* gps_verdict_name(GpsVerdict v) {
    switch (v) {
        case GpsVerdict::True: return "true";
        case GpsVerdict::False: return "false";
        case GpsVerdict::NecessaryOnly: return "necessary-conditions-only";
        case GpsVerdict::Withheld: return "withheld";
    }
    return "?";
}

struct ClassVerdict {
    int d = 0;              // clique-number class (primed class for TSTAB)
    GorensteinVerdict gorenstein;
};

struct GpsReport {
    GpsVerdict verdict = GpsVerdict::Withheld;
    bool primed_classes = false;          // TSTAB classes use the size-<=3 spectrum
    std::vector<ClassVerdict> classes;    // evaluation per class
    std::string note;

    bool all_classes_gorenstein() const {
        for (const auto& c : classes)
            if (!c.gorenstein.value) return false;
        return true;
    }
};

// For the stable-set ring of an h-perfect graph (HSTAB with verified or
// assumed status) the per-class Gorenstein test is an exact iff. Otherwise
// the classes give necessary conditions only: a failing class is a definite
// no, an all-pass is reported as necessary-conditions-only.
inline GpsReport gps(const Graph& g, Variant variant, HPerfectStatus status) {
    GpsReport rep;
    rep.primed_classes = (variant == Variant::TSTAB);
    auto cs = components(g);
    const auto& I = rep.primed_classes ? cs.I_prime : cs.I;
    for (int d : I) {
        ClassVerdict cv;
        cv.d = d;
        cv.gorenstein = gorenstein(class_subgraph(g, cs, d, rep.primed_classes), variant);
        rep.classes.push_back(std::move(cv));
    }
    bool all_ok = rep.all_classes_gorenstein();
    bool iff = variant == Variant::HSTAB &&
               (status == HPerfectStatus::Verified || status == HPerfectStatus::Assumed);
    if (iff) {
        rep.verdict = all_ok ? GpsVerdict::True : GpsVerdict::False;
        rep.note = status == HPerfectStatus::Assumed
                       ? "iff verdict under the assumed h-perfect hypothesis"
                       : "iff verdict; graph verified h-perfect";
    } else {
        rep.verdict = all_ok ? GpsVerdict::NecessaryOnly : GpsVerdict::False;
        rep.note = all_ok ? "necessary conditions hold; no exact criterion applies here"
                          : "a class ring fails the necessary Gorenstein condition";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Nearly Gorenstein, for the stable-set ring of an h-perfect graph.

enum class NearlyVerdict { Gorenstein, NearlyNotGorenstein, NotNearly, Withheld };

inline const char* nearly_verdict_name(NearlyVerdict v) {
    switch (v) {
        case NearlyVerdict::Gorenstein: return "gorenstein";
        case NearlyVerdict::NearlyNotGorenstein: return "nearly-not-gorenstein";
        case NearlyVerdict::NotNearly: return "not-nearly";
        case NearlyVerdict::Withheld: return "withheld";
    }
    return "?";
}

struct NearlyReport {
    NearlyVerdict verdict = NearlyVerdict::Withheld;
    int u = 0;
    std::vector<int> I;                  // d_1 < ... < d_u
    std::vector<ClassVerdict> classes;   // per d in I, HSTAB Gorenstein verdicts
    std::string note;
};

// The ring is nearly Gorenstein iff every component ring is Gorenstein and
// the clique numbers of the components pairwise differ by at most one. In
// class terms: Gorenstein itself, or u = 2 with d2 - d1 = 1 and both class
// rings Gorenstein. Both formulations are evaluated and must agree.
inline NearlyReport nearly_gorenstein(const Graph& g, HPerfectStatus status) {
    NearlyReport rep;
    auto cs = components(g);
    rep.u = cs.u();
    rep.I = cs.I;
    for (int d : cs.I) {
        ClassVerdict cv;
        cv.d = d;
        cv.gorenstein = gorenstein(class_subgraph(g, cs, d, false), Variant::HSTAB);
        rep.classes.push_back(std::move(cv));
    }
    if (status != HPerfectStatus::Verified && status != HPerfectStatus::Assumed) {
        rep.verdict = NearlyVerdict::Withheld;
        rep.note = std::string("verdict withheld: h-perfectness ") + h_perfect_name(status);
        return rep;
    }

    NearlyVerdict verdict;
    if (gorenstein(g, Variant::HSTAB).value) {
        verdict = NearlyVerdict::Gorenstein;
    } else if (rep.u == 2 && rep.I[1] - rep.I[0] == 1 && rep.classes[0].gorenstein.value &&
               rep.classes[1].gorenstein.value) {
        verdict = NearlyVerdict::NearlyNotGorenstein;
    } else {
        verdict = NearlyVerdict::NotNearly;
    }

    // componentwise formulation: every component ring Gorenstein and all
    // pairwise clique-number gaps <= 1
    bool componentwise = true;
    for (const auto& comp : cs.components)
        componentwise =
            componentwise && gorenstein(induced_subgraph(g, comp), Variant::HSTAB).value;
    componentwise = componentwise && (cs.I.back() - cs.I.front() <= 1);
    bool class_form = verdict != NearlyVerdict::NotNearly;
    if (componentwise != class_form)
        throw std::logic_error("nearly-Gorenstein formulations disagree on " + g.key());

    rep.verdict = verdict;
    return rep;
}

// ---------------------------------------------------------------------------
// Full report.

struct VariantReport {
    Variant variant;
    GorensteinVerdict gorenstein;
    GpsReport gps;
    long long a_invariant = 0;
};

struct ClassificationReport {
    HPerfectStatus h_status = HPerfectStatus::Undecided;
    ComponentSpectrum spectrum;
    std::vector<VariantReport> variants;
    NearlyReport nearly;  // stable-set ring; withheld unless h-perfect holds

    bool any_withheld() const {
        if (nearly.verdict == NearlyVerdict::Withheld) return true;
        for (const auto& v : variants)
            if (v.gps.verdict == GpsVerdict::Withheld) return true;
        return false;
    }
};

inline HPerfectStatus decide_h_perfect(const Graph& g, bool assume, int hp_bound = 12) {
    Decision d = is_h_perfect(g, hp_bound);
    if (d == Decision::True) return HPerfectStatus::Verified;
    if (d == Decision::False) return HPerfectStatus::Refuted;
    return assume ? HPerfectStatus::Assumed : HPerfectStatus::Undecided;
}

inline ClassificationReport analyze(const Graph& g, const std::vector<Variant>& variants,
                                    bool assume_h_perfect = false, int hp_bound = 12) {
    ClassificationReport rep;
    rep.h_status = decide_h_perfect(g, assume_h_perfect, hp_bound);
    rep.spectrum = components(g);
    for (Variant v : variants) {
        VariantReport vr;
        vr.variant = v;
        vr.gorenstein = gorenstein(g, v);
        vr.gps = gps(g, v, rep.h_status);
        vr.a_invariant = a_invariant(VariantSystem::build(g, v));
        rep.variants.push_back(std::move(vr));
    }
    rep.nearly = nearly_gorenstein(g, rep.h_status);

    // report-consistency invariants
    for (const auto& vr : rep.variants) {
        if (vr.variant != Variant::HSTAB) continue;
        if (vr.gorenstein.value && rep.nearly.verdict != NearlyVerdict::Withheld &&
            rep.nearly.verdict != NearlyVerdict::Gorenstein)
            throw std::logic_error("gorenstein ring must be classified gorenstein in nearly report");
        if (rep.nearly.verdict == NearlyVerdict::NearlyNotGorenstein && vr.gorenstein.value)
            throw std::logic_error("nearly-not-gorenstein contradicts a gorenstein verdict");
        if (vr.gps.verdict == GpsVerdict::False &&
            rep.nearly.verdict == NearlyVerdict::NearlyNotGorenstein)
            throw std::logic_error("nearly Gorenstein implies Gorenstein on the punctured spectrum");
    }
    return rep;
}

}  // namespace stabring

#endif
