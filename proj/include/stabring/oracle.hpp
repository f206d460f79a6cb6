#ifndef STABRING_ORACLE_HPP
#define STABRING_ORACLE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"
#include "graph.hpp"
#include "lattice_ring.hpp"

namespace stabring {

// Result of a trace-ideal membership query. A monomial lies in the trace of
// the canonical ideal iff it is the sum of a first-power member (the
// canonical part) and an inverse-power member. Certificates are re-validated
// before being returned.
struct TraceQuery {
    LatticeFunction mu;
    bool member = false;
    LatticeFunction canonical_part;  // in the n = 1 system
    LatticeFunction inverse_part;    // in the n = -1 system
};

// Exhaustive search for a certificate eta + zeta = mu with eta in the first
// and zeta in the inverse symbolic-power system. The vertex values of eta
// range over [1, mu(z)+1] (zeta(z) >= -1 forces the upper end); the grading
// values are not searched: for fixed vertex values the admissible eta(-inf)
// form an interval whose ends are determined by the constraint sums of eta
// and of zeta = mu - eta. The first certificate in ascending lexicographic
// eta order is returned, so results are reproducible.
inline TraceQuery trace_member(const VariantSystem& sys, const LatticeFunction& mu) {
    TraceQuery q;
    q.mu = mu;
    int nv = sys.graph.n;
    if ((int)mu.values.size() != nv) throw std::invalid_argument("trace query dimension mismatch");
    for (long long v : mu.values)
        if (v < 0) return q;  // eta >= 1 and zeta >= -1 force mu >= 0

    auto cons = detail::sum_constraints(sys);
    size_t ncons = cons.size();
    int s_min = sys.cliques.min_size();
    int s_max = sys.cliques.max_size();
    // eta(-inf) <= mu.deg + s_min + 1: the inverse part satisfies
    // zeta(-inf) >= zeta+(K) - 1 >= -#K - 1 for every family member K.
    // eta(-inf) >= s_max + 1 likewise. These give static pruning caps.
    long long eta_inf_cap = mu.deg + s_min + 1;
    long long zeta_inf_cap = mu.deg - (s_max + 1);

    std::vector<std::vector<int>> at(nv);
    for (size_t c = 0; c < ncons; ++c)
        for (int v : cons[c].verts) at[v].push_back((int)c);

    std::vector<long long> sum_eta(ncons, 0), sum_zeta(ncons, 0);
    std::vector<int> remaining(ncons);
    for (size_t c = 0; c < ncons; ++c) remaining[c] = (int)cons[c].verts.size();

    std::vector<long long> eta(nv, 0), found_eta;
    bool found = false;
    long long found_inf = 0;

    auto feasible_prefix = [&](int c) -> bool {
        const auto& con = cons[c];
        long long r = remaining[c];
        if (con.hole_half == 0) {
            // eta+(K) + r <= eta(-inf) - 1 must stay reachable
            if (sum_eta[c] + r > eta_inf_cap - 1) return false;
            if (sum_zeta[c] - r > zeta_inf_cap + 1) return false;
        } else {
            long long w = 2 * con.hole_half;  // = len - 1
            if (2 * (sum_eta[c] + r) > eta_inf_cap * w - 2) return false;
            if (2 * (sum_zeta[c] - r) > zeta_inf_cap * w + 2) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (found) return;
        if (v == nv) {
            long long lo = 0, hi_from_zeta = mu.deg;
            bool first = true;
            for (size_t c = 0; c < ncons; ++c) {
                long long min_eta_inf, min_zeta_inf;
                if (cons[c].hole_half == 0) {
                    min_eta_inf = sum_eta[c] + 1;
                    min_zeta_inf = sum_zeta[c] - 1;
                } else {
                    long long w = 2 * cons[c].hole_half;
                    min_eta_inf = detail::ceil_div_pos(2 * sum_eta[c] + 2, w);
                    min_zeta_inf = detail::ceil_div_pos(2 * sum_zeta[c] - 2, w);
                }
                if (first) {
                    lo = min_eta_inf;
                    hi_from_zeta = mu.deg - min_zeta_inf;
                    first = false;
                } else {
                    lo = std::max(lo, min_eta_inf);
                    hi_from_zeta = std::min(hi_from_zeta, mu.deg - min_zeta_inf);
                }
            }
            if (!first && lo <= hi_from_zeta) {
                found = true;
                found_inf = lo;
                found_eta = eta;
            }
            return;
        }
        for (long long e = 1; e <= mu.values[v] + 1 && !found; ++e) {
            eta[v] = e;
            bool ok = true;
            for (int c : at[v]) {
                sum_eta[c] += e;
                sum_zeta[c] += mu.values[v] - e;
                --remaining[c];
                if (!feasible_prefix(c)) ok = false;
            }
            if (ok) self(self, v + 1);
            for (int c : at[v]) {
                sum_eta[c] -= e;
                sum_zeta[c] -= mu.values[v] - e;
                ++remaining[c];
            }
        }
        eta[v] = 0;
    };
    rec(rec, 0);

    if (!found) return q;
    q.member = true;
    q.canonical_part = LatticeFunction(found_eta, found_inf);
    q.inverse_part = mu - q.canonical_part;
    if (!in_symbolic_power(sys, 1, q.canonical_part) ||
        !in_symbolic_power(sys, -1, q.inverse_part))
        throw std::logic_error("trace certificate failed re-validation");
    return q;
}

// The ring is Gorenstein iff the trace of the canonical ideal is the whole
// ring, iff the degree-0 monomial is a trace member.
inline bool gorenstein_trace(const VariantSystem& sys) {
    return trace_member(sys, LatticeFunction::zero(sys.graph.n, 0)).member;
}

// ---------------------------------------------------------------------------
// Witness monomials refuting Gorenstein-on-the-punctured-spectrum.
//
// Form 1: a component that is not pure (not t-pure for the TSTAB system)
// contains family members K1, K2 of different sizes with a common vertex p;
// the monomial with value n at p and grading n is then outside the trace for
// every n >= 1.
// Form 2: a pure component of family size m with a chordless odd cycle of
// length 2l+1 such that l(m-1) > 2; the monomial with value n on alternate
// cycle vertices and grading n is outside the trace for every n >= 1.

struct NonGpsWitness {
    enum class Form { SizeGapAtVertex, AlternatingCycle };
    Form form;
    int vertex = -1;                 // form 1: the shared vertex p
    std::vector<int> clique_a, clique_b;
    std::vector<int> cycle_odd_positions;  // form 2: the alternate vertices
    std::string describe() const {
        if (form == Form::SizeGapAtVertex)
            return "family size gap at vertex " + std::to_string(vertex);
        return "alternating chordless odd cycle support";
    }
};

inline std::optional<NonGpsWitness> find_non_gps_witness(const Graph& g, Variant variant) {
    auto cs = components(g);
    for (const auto& comp : cs.components) {
        Graph sub = induced_subgraph(g, comp);
        CliqueFamily fam =
            variant == Variant::TSTAB ? k_maximal_elements(sub) : maximal_cliques(sub);
        if (fam.max_size() != fam.min_size()) {
            // scan for intersecting members of unequal size (guaranteed to exist
            // in a connected non-pure component)
            for (size_t i = 0; i < fam.members.size(); ++i)
                for (size_t j = 0; j < fam.members.size(); ++j) {
                    if (fam.members[i].size() <= fam.members[j].size()) continue;
                    std::vector<int> common;
                    std::set_intersection(fam.members[i].begin(), fam.members[i].end(),
                                          fam.members[j].begin(), fam.members[j].end(),
                                          std::back_inserter(common));
                    if (common.empty()) continue;
                    NonGpsWitness w;
                    w.form = NonGpsWitness::Form::SizeGapAtVertex;
                    w.vertex = comp[common.front()];
                    for (int v : fam.members[i]) w.clique_a.push_back(comp[v]);
                    for (int v : fam.members[j]) w.clique_b.push_back(comp[v]);
                    return w;
                }
            throw std::logic_error("non-pure connected component without intersecting witness pair");
        }
        if (variant == Variant::QSTAB) continue;  // no cycle family in that system
        int m = fam.max_size();
        for (const auto& hole : odd_holes(sub).holes) {
            long long l = ((long long)hole.size() - 1) / 2;
            if (l * (m - 1) > 2) {
                NonGpsWitness w;
                w.form = NonGpsWitness::Form::AlternatingCycle;
                for (size_t i = 1; i < hole.size(); i += 2)
                    w.cycle_odd_positions.push_back(comp[hole[i]]);
                return w;
            }
        }
    }
    return std::nullopt;
}

// The explicit degree-n monomial outside the trace ideal.
// Throws if the graph has no qualifying component.
inline LatticeFunction non_gps_witness_monomial(const Graph& g, Variant variant, long long n) {
    if (n < 1) throw std::invalid_argument("witness degree must be >= 1");
    auto w = find_non_gps_witness(g, variant);
    if (!w)
        throw std::invalid_argument(
            "no qualifying component: every component passes the punctured-spectrum "
            "necessary conditions");
    LatticeFunction mu = LatticeFunction::zero(g.n, n);
    if (w->form == NonGpsWitness::Form::SizeGapAtVertex) {
        mu.values[w->vertex] = n;
    } else {
        for (int v : w->cycle_odd_positions) mu.values[v] = n;
    }
    return mu;
}

// ---------------------------------------------------------------------------
// Bounded nearly-Gorenstein verification.

enum class NearlyOracleVerdict { Confirmed, Refuted, Inconclusive };

inline const char* nearly_oracle_name(NearlyOracleVerdict v) {
    switch (v) {
        case NearlyOracleVerdict::Confirmed: return "confirmed";
        case NearlyOracleVerdict::Refuted: return "refuted";
        case NearlyOracleVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct NearlyOracleReport {
    NearlyOracleVerdict verdict = NearlyOracleVerdict::Inconclusive;
    bool saturated = false;        // no degree->=2 generators in the top two degrees
    long long generators_checked = 0;
    LatticeFunction witness;       // non-member generator when refuted
    std::string note;
};

// The trace contains the graded maximal ideal iff it contains every
// semigroup generator. Refutation needs one non-member generator; a positive
// answer additionally requires the generator scan to have saturated below
// n_max (no generators of degree >= 2 in the top two scanned degrees), since
// no a-priori generation bound is available.
inline NearlyOracleReport verify_nearly(const VariantSystem& sys, long long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_nearly needs n_max >= 1");
    NearlyOracleReport rep;
    GeneratorScan scan = scan_generators(sys, n_max);
    if (scan.truncated) {
        rep.note = "generator enumeration budget exceeded";
        return rep;
    }
    rep.saturated = true;
    for (long long d = std::max<long long>(2, n_max - 1); d <= n_max; ++d)
        if (scan.per_degree.count(d) && scan.per_degree.at(d) > 0) rep.saturated = false;

    for (const auto& gen : scan.generators) {
        ++rep.generators_checked;
        if (!trace_member(sys, gen).member) {
            rep.verdict = NearlyOracleVerdict::Refuted;
            rep.witness = gen;
            rep.note = "generator of degree " + std::to_string(gen.deg) + " outside the trace";
            return rep;
        }
    }
    if (rep.saturated) {
        rep.verdict = NearlyOracleVerdict::Confirmed;
        rep.note = "all generators up to degree " + std::to_string(n_max) +
                   " are trace members; generator scan saturated";
    } else {
        rep.note = "all scanned generators are members but generators persist near the bound";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Bounded Gorenstein-on-the-punctured-spectrum verification.

enum class GpsOracleVerdict { Consistent, Refuted, Inconclusive };

inline const char* gps_oracle_name(GpsOracleVerdict v) {
    switch (v) {
        case GpsOracleVerdict::Consistent: return "consistent";
        case GpsOracleVerdict::Refuted: return "refuted";
        case GpsOracleVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct GpsOracleReport {
    GpsOracleVerdict verdict = GpsOracleVerdict::Inconclusive;
    bool witness_family_used = false;
    bool bound_violated = false;  // a provably-outside monomial was a member: a bug
    long long swept = 0;
    std::string note;
};

// If a refutation family applies, its monomials are checked for degrees
// 1..hi; all of them must be non-members (that refutes the property: the
// family meets every power of the maximal ideal). Otherwise all monomials
// with degree in [lo, hi] are swept. Degrees below the family-size gap must
// be non-members; if the top swept degree has members only, the sweep is
// consistent with the property, which is all a bounded check can say.
inline GpsOracleReport verify_gps_bounded(const VariantSystem& sys, long long lo, long long hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad degree window");
    GpsOracleReport rep;
    auto w = find_non_gps_witness(sys.graph, sys.variant);
    if (w) {
        rep.witness_family_used = true;
        for (long long n = 1; n <= hi; ++n) {
            LatticeFunction mu = non_gps_witness_monomial(sys.graph, sys.variant, n);
            ++rep.swept;
            if (trace_member(sys, mu).member) {
                rep.bound_violated = true;
                rep.note = "witness monomial of degree " + std::to_string(n) +
                           " unexpectedly lies in the trace";
                return rep;
            }
        }
        rep.verdict = GpsOracleVerdict::Refuted;
        rep.note = "witness family (" + w->describe() + ") outside the trace for degrees 1.." +
                   std::to_string(hi);
        return rep;
    }

    long long gap = sys.cliques.max_size() - sys.cliques.min_size();
    long long top_non_members = 0;
    for (long long d = lo; d <= hi; ++d) {
        long long non_members = 0;
        for (const auto& mu : enumerate_slice(sys, 0, d)) {
            ++rep.swept;
            bool member = trace_member(sys, mu).member;
            if (!member) ++non_members;
            if (d < gap && member) {
                rep.bound_violated = true;
                rep.note = "monomial of degree " + std::to_string(d) +
                           " below the size gap lies in the trace";
                return rep;
            }
        }
        if (d == hi) top_non_members = non_members;
    }
    if (top_non_members == 0) {
        rep.verdict = GpsOracleVerdict::Consistent;
        rep.note = "all degree-" + std::to_string(hi) + " monomials are trace members";
    } else {
        rep.note = std::to_string(top_non_members) +
                   " non-members at the top swept degree; window too small to conclude";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classifier-versus-oracle harness.

struct CrossCheckEntry {
    std::string claim;
    std::string classifier;
    std::string oracle;
    bool agree = false;
    std::string detail;
};

struct CrossCheckBudget {
    long long nearly_n_max = 0;  // 0: use the vertex count
    long long gps_lo = 1;
    long long gps_hi = 3;
    long long slice_extra = 2;   // canonical cross-check up to -a + slice_extra
    int slice_vertex_cap = 7;
    int hp_bound = 12;
    bool assume_h_perfect = false;
    unsigned seed = 0;
    int ideal_samples = 16;
};

struct CrossCheckReport {
    HPerfectStatus h_status = HPerfectStatus::Undecided;
    std::vector<CrossCheckEntry> entries;

    bool all_agree() const {
        for (const auto& e : entries)
            if (!e.agree) return false;
        return true;
    }
};

inline CrossCheckReport cross_check(const Graph& g, const CrossCheckBudget& budget = {}) {
    CrossCheckReport rep;
    rep.h_status = decide_h_perfect(g, budget.assume_h_perfect, budget.hp_bound);
    std::mt19937 rng(budget.seed);

    for (Variant variant : {Variant::HSTAB, Variant::QSTAB, Variant::TSTAB}) {
        VariantSystem sys = VariantSystem::build(g, variant);
        std::string vn = variant_name(variant);

        {
            CrossCheckEntry e;
            e.claim = "gorenstein/" + vn;
            GorensteinVerdict cv = gorenstein(g, variant);
            bool ov = gorenstein_trace(sys);
            e.classifier = cv.value ? "true" : "false";
            e.oracle = ov ? "true" : "false";
            e.agree = cv.value == ov;
            if (!cv.value) e.detail = cv.reason;
            rep.entries.push_back(std::move(e));
        }
        {
            CrossCheckEntry e;
            e.claim = "a-invariant/" + vn;
            try {
                long long a = a_invariant(sys);
                e.classifier = std::to_string(a);
                e.oracle = std::to_string(a);
                e.agree = true;
            } catch (const std::logic_error& ex) {
                e.classifier = "closed form";
                e.oracle = "enumeration";
                e.agree = false;
                e.detail = ex.what();
            }
            rep.entries.push_back(std::move(e));
        }
        {
            CrossCheckEntry e;
            e.claim = "gps/" + vn;
            GpsReport cv = gps(g, variant, rep.h_status);
            GpsOracleReport ov = verify_gps_bounded(sys, budget.gps_lo, budget.gps_hi);
            e.classifier = gps_verdict_name(cv.verdict);
            e.oracle = gps_oracle_name(ov.verdict);
            e.detail = ov.note;
            if (ov.bound_violated)
                e.agree = false;
            else if (cv.verdict == GpsVerdict::False)
                e.agree = ov.verdict == GpsOracleVerdict::Refuted;
            else
                e.agree = ov.verdict != GpsOracleVerdict::Refuted;
            rep.entries.push_back(std::move(e));
        }
        if (g.n <= budget.slice_vertex_cap) {
            CrossCheckEntry e;
            e.claim = "canonical-slices/" + vn;
            long long a = a_invariant(sys);
            bool ok = true;
            for (long long N = -a; N <= -a + budget.slice_extra; ++N)
                ok = ok && canonical_slice_cross_check(g, variant, N);
            e.classifier = "symbolic-power slice";
            e.oracle = "strict-interior points";
            e.agree = ok;
            e.detail = "degrees " + std::to_string(-a) + ".." +
                       std::to_string(-a + budget.slice_extra);
            rep.entries.push_back(std::move(e));
        }
        {
            // trace is an ideal at the monomial level: member + ring monomial
            // stays a member (spot check)
            CrossCheckEntry e;
            e.claim = "trace-ideal-property/" + vn;
            auto ring_deg1 = enumerate_slice(sys, 0, 1);
            long long a = -a_invariant(sys);
            auto members = enumerate_slice(sys, 1, a);  // all are trace members
            bool ok = true;
            int samples = 0;
            if (!members.empty() && !ring_deg1.empty()) {
                std::uniform_int_distribution<size_t> pick_m(0, members.size() - 1);
                std::uniform_int_distribution<size_t> pick_r(0, ring_deg1.size() - 1);
                for (int i = 0; i < budget.ideal_samples; ++i) {
                    LatticeFunction mu = members[pick_m(rng)];
                    LatticeFunction nu = ring_deg1[pick_r(rng)];
                    if (!trace_member(sys, mu).member || !trace_member(sys, mu + nu).member) {
                        ok = false;
                        break;
                    }
                    ++samples;
                }
            }
            e.classifier = "ideal closure";
            e.oracle = ok ? "holds" : "violated";
            e.agree = ok;
            e.detail = std::to_string(samples) + " samples";
            rep.entries.push_back(std::move(e));
        }
    }

    // nearly-Gorenstein: stable-set ring claims need the h-perfect hypothesis
    if (rep.h_status == HPerfectStatus::Verified || rep.h_status == HPerfectStatus::Assumed) {
        CrossCheckEntry e;
        e.claim = "nearly-gorenstein/stab";
        NearlyReport cv = nearly_gorenstein(g, rep.h_status);
        long long n_max = budget.nearly_n_max > 0 ? budget.nearly_n_max : g.n;
        NearlyOracleReport ov = verify_nearly(VariantSystem::build(g, Variant::HSTAB), n_max);
        e.classifier = nearly_verdict_name(cv.verdict);
        e.oracle = nearly_oracle_name(ov.verdict);
        e.detail = ov.note;
        bool classifier_nearly = cv.verdict == NearlyVerdict::Gorenstein ||
                                 cv.verdict == NearlyVerdict::NearlyNotGorenstein;
        if (ov.verdict == NearlyOracleVerdict::Inconclusive)
            e.agree = true;  // honest non-answer, recorded in the detail
        else
            e.agree = classifier_nearly == (ov.verdict == NearlyOracleVerdict::Confirmed);
        rep.entries.push_back(std::move(e));
    } else {
        CrossCheckEntry e;
        e.claim = "nearly-gorenstein/stab";
        e.classifier = "withheld";
        e.oracle = "skipped";
        e.agree = true;
        e.detail = std::string("h-perfectness ") + h_perfect_name(rep.h_status) +
                   "; stable-set-ring verdicts withheld";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace stabring

#endif
