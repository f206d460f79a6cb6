#ifndef STABRING_LATTICE_RING_HPP
#define STABRING_LATTICE_RING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "polytope.hpp"

namespace stabring {

// An integer vector on V plus a grading value at the extra coordinate
// (written deg). Monomials of the Ehrhart ring and of the symbolic powers of
// its canonical ideal are exactly these.
struct LatticeFunction {
    std::vector<long long> values;
    long long deg = 0;

    LatticeFunction() = default;
    LatticeFunction(std::vector<long long> v, long long d) : values(std::move(v)), deg(d) {}

    static LatticeFunction zero(int n, long long d = 0) {
        return LatticeFunction(std::vector<long long>(n, 0), d);
    }

    friend LatticeFunction operator+(const LatticeFunction& a, const LatticeFunction& b) {
        LatticeFunction r = a;
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
        r.deg += b.deg;
        return r;
    }
    friend LatticeFunction operator-(const LatticeFunction& a, const LatticeFunction& b) {
        LatticeFunction r = a;
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
        r.deg -= b.deg;
        return r;
    }
    friend bool operator==(const LatticeFunction& a, const LatticeFunction& b) {
        return a.deg == b.deg && a.values == b.values;
    }
    friend bool operator!=(const LatticeFunction& a, const LatticeFunction& b) {
        return !(a == b);
    }
    // canonical order: lexicographic on (values, deg)
    friend bool operator<(const LatticeFunction& a, const LatticeFunction& b) {
        if (a.values != b.values) return a.values < b.values;
        return a.deg < b.deg;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        s += "; " + std::to_string(deg) + ")";
        return s;
    }
};

// The constraint family that defines the graded membership systems of one
// polytope variant: maximal cliques for HSTAB/QSTAB, maximal size-<=3
// cliques for TSTAB, plus the chordless odd holes for HSTAB/TSTAB.
struct VariantSystem {
    Variant variant;
    Graph graph;
    CliqueFamily cliques;
    OddHoleSet holes;
    int omega = 0;  // clique number of graph

    static VariantSystem build(const Graph& g, Variant v) {
        VariantSystem s;
        s.variant = v;
        s.graph = g;
        s.cliques = (v == Variant::TSTAB) ? k_maximal_elements(g) : maximal_cliques(g);
        if (v != Variant::QSTAB) s.holes = odd_holes(g);
        s.omega = clique_number(g);
        return s;
    }

    // System of the induced subgraph on `verts` (a union of components).
    VariantSystem restricted(const std::vector<int>& verts) const {
        return build(induced_subgraph(graph, verts), variant);
    }
};

namespace detail {

// Uniform view of one membership constraint: sum over `verts` <= cap(n, N)
// where cap is N - n for cliques and N*(len-1)/2 - n for holes (len odd, so
// the division is exact integer arithmetic).
struct SumConstraint {
    std::vector<int> verts;
    long long hole_half = 0;  // 0 for cliques, (len-1)/2 for holes

    long long cap(long long n, long long N) const {
        return hole_half ? N * hole_half - n : N - n;
    }
};

inline std::vector<SumConstraint> sum_constraints(const VariantSystem& sys) {
    std::vector<SumConstraint> cs;
    for (const auto& k : sys.cliques.members) cs.push_back({k, 0});
    for (const auto& h : sys.holes.holes)
        cs.push_back({h, ((long long)h.size() - 1) / 2});
    return cs;
}

}  // namespace detail

// Membership in the degree-graded monomial system of the n-th symbolic power
// of the canonical ideal: mu(z) >= n on V, clique sums <= deg - n, hole sums
// <= deg*(len-1)/2 - n. n = 0 gives the monomials of the ring itself.
inline bool in_symbolic_power(const VariantSystem& sys, long long n, const LatticeFunction& mu) {
    if ((int)mu.values.size() != sys.graph.n)
        throw std::invalid_argument("lattice function has wrong dimension");
    for (long long v : mu.values)
        if (v < n) return false;
    for (const auto& k : sys.cliques.members) {
        long long s = 0;
        for (int v : k) s += mu.values[v];
        if (s > mu.deg - n) return false;
    }
    for (const auto& h : sys.holes.holes) {
        long long s = 0;
        for (int v : h) s += mu.values[v];
        // compare 2*s <= deg*(len-1) - 2n to stay in integers
        if (2 * s > mu.deg * ((long long)h.size() - 1) - 2 * n) return false;
    }
    return true;
}

namespace detail {

// DFS over all members of the degree-N slice of the n-th system, emitting
// values in ascending lexicographic order. The visitor returns false to
// abort the enumeration.
//
// Coordinate bounds: every vertex lies in at least one family member (maximal
// cliques cover V; so do maximal size-<=3 cliques), so for vertex z inside
// constraint c with r unassigned members the admissible values are
// n <= mu(z) <= cap(c) - assigned(c) - n*(r-1).
template <class F>
inline void slice_dfs(const VariantSystem& sys, long long n, long long N, F&& visit) {
    int nv = sys.graph.n;
    auto cons = sum_constraints(sys);
    std::vector<std::vector<int>> at(nv);  // vertex -> constraint indices
    for (size_t c = 0; c < cons.size(); ++c)
        for (int v : cons[c].verts) at[v].push_back((int)c);
    for (int v = 0; v < nv; ++v)
        if (at[v].empty()) throw std::logic_error("vertex not covered by any constraint");

    std::vector<long long> caps(cons.size());
    for (size_t c = 0; c < cons.size(); ++c) caps[c] = cons[c].cap(n, N);
    std::vector<long long> sum(cons.size(), 0);
    std::vector<int> remaining(cons.size());
    for (size_t c = 0; c < cons.size(); ++c) remaining[c] = (int)cons[c].verts.size();

    std::vector<long long> mu(nv, 0);
    bool go = true;
    auto rec = [&](auto&& self, int v) -> void {
        if (!go) return;
        if (v == nv) {
            go = visit(mu);
            return;
        }
        long long hi = INT64_MAX / 4;  // every vertex is constrained, so this tightens below
        for (int c : at[v])
            hi = std::min(hi, caps[c] - sum[c] - n * (remaining[c] - 1));
        for (long long val = n; val <= hi && go; ++val) {
            mu[v] = val;
            bool ok = true;
            for (int c : at[v]) {
                sum[c] += val;
                --remaining[c];
                if (sum[c] + n * remaining[c] > caps[c]) ok = false;
            }
            if (ok) self(self, v + 1);
            for (int c : at[v]) {
                sum[c] -= val;
                ++remaining[c];
            }
        }
        mu[v] = 0;
    };
    rec(rec, 0);
}

}  // namespace detail

template <class F>
inline void for_each_slice_member(const VariantSystem& sys, long long n, long long N, F&& visit) {
    detail::slice_dfs(sys, n, N, std::forward<F>(visit));
}

// All members of the degree-N slice, canonically sorted (lex on values).
inline std::vector<LatticeFunction> enumerate_slice(const VariantSystem& sys, long long n,
                                                    long long N) {
    std::vector<LatticeFunction> out;
    detail::slice_dfs(sys, n, N, [&](const std::vector<long long>& mu) {
        out.emplace_back(mu, N);
        return true;
    });
    return out;
}

inline long long slice_count(const VariantSystem& sys, long long n, long long N) {
    long long c = 0;
    detail::slice_dfs(sys, n, N, [&](const std::vector<long long>&) {
        ++c;
        return true;
    });
    return c;
}

inline bool slice_nonempty(const VariantSystem& sys, long long n, long long N) {
    bool found = false;
    detail::slice_dfs(sys, n, N, [&](const std::vector<long long>&) {
        found = true;
        return false;
    });
    return found;
}

// H(N) = number of ring monomials of degree N, for N = 0..n_max.
inline std::vector<long long> hilbert_function(const VariantSystem& sys, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("hilbert_function: negative degree bound");
    std::vector<long long> h;
    for (long long N = 0; N <= n_max; ++N) h.push_back(slice_count(sys, 0, N));
    return h;
}

// a-invariant: negative of the least degree of a nonzero canonical-ideal
// slice, found by searching upward, then checked against the closed form
// -omega-1 (HSTAB/QSTAB) or -min(omega,3)-1 (TSTAB). A mismatch means an
// implementation bug, so it is a hard failure rather than a result.
inline long long a_invariant(const VariantSystem& sys) {
    long long expect = sys.variant == Variant::TSTAB
                           ? -(std::min<long long>(sys.omega, 3) + 1)
                           : -((long long)sys.omega + 1);
    long long found = 0;
    for (long long N = 1; N <= -expect + 2; ++N) {
        if (slice_nonempty(sys, 1, N)) { found = N; break; }
    }
    if (found == 0 || -found != expect)
        throw std::logic_error("a-invariant mismatch: enumeration gives " +
                               std::to_string(found ? -found : 0) + ", closed form gives " +
                               std::to_string(expect));
    return -found;
}

// ---------------------------------------------------------------------------
// Semigroup generators.
//
// A generator is a monomial of positive degree admitting no decomposition
// into two positive-degree monomials of the ring. Constraints of a disjoint
// union act per component, so mu (degree d) splits as nu + rho with degrees
// (a, b) iff each component restriction splits with the same degree pair.
// Hence mu is a generator iff for every split (a, b) some component
// restriction is unsplittable at (a, b). We tabulate unsplittable elements
// per component and enumerate only covering combinations; components whose
// rings are generated in degree 1 never enter a product walk.

namespace detail {

inline long long ceil_div_pos(long long x, long long y) {  // y > 0
    long long q = x / y, r = x % y;
    return q + (r > 0 ? 1 : 0);
}

struct ComponentTable {
    VariantSystem sys;
    std::vector<int> verts;  // global indices
    std::vector<std::vector<std::vector<long long>>> slice;  // [degree] -> members
    std::vector<SumConstraint> cons;
    std::vector<std::vector<int>> at;  // vertex -> constraint indices

    void init() {
        cons = sum_constraints(sys);
        at.assign(sys.graph.n, {});
        for (size_t c = 0; c < cons.size(); ++c)
            for (int v : cons[c].verts) at[v].push_back((int)c);
    }

    void ensure_degree(long long d) {
        while ((long long)slice.size() <= d) {
            long long N = (long long)slice.size();
            std::vector<std::vector<long long>> members;
            slice_dfs(sys, 0, N, [&](const std::vector<long long>& mu) {
                members.push_back(mu);
                return true;
            });
            slice.push_back(std::move(members));
        }
    }

    // Least degree at which mu lies in the ring system. Membership is
    // monotone in the degree, so mu splits at (a, b) with a zero part
    // whenever b is at least this threshold.
    long long min_ring_degree(const std::vector<long long>& mu) const {
        long long t = 0;
        for (const auto& con : cons) {
            long long s = 0;
            for (int v : con.verts) s += mu[v];
            t = std::max(t, con.hole_half ? ceil_div_pos(s, con.hole_half) : s);
        }
        return t;
    }

    // Can mu (a degree-d ring monomial of this component) be written as a
    // degree-a monomial plus a degree-b monomial?
    bool splittable(const std::vector<long long>& mu, long long a, long long b) const {
        size_t nc = cons.size();
        std::vector<long long> cap_a(nc), cap_b(nc), sum_nu(nc, 0), sum_rho(nc, 0);
        for (size_t c = 0; c < nc; ++c) {
            cap_a[c] = cons[c].cap(0, a);
            cap_b[c] = cons[c].cap(0, b);
        }
        bool ok = false;
        auto rec = [&](auto&& self, size_t v) -> void {
            if (ok) return;
            if (v == mu.size()) { ok = true; return; }
            for (long long nu = 0; nu <= mu[v] && !ok; ++nu) {
                long long rho = mu[v] - nu;
                bool feasible = true;
                for (int c : at[v]) {
                    sum_nu[c] += nu;
                    sum_rho[c] += rho;
                    if (sum_nu[c] > cap_a[c] || sum_rho[c] > cap_b[c]) feasible = false;
                }
                if (feasible) self(self, v + 1);
                for (int c : at[v]) {
                    sum_nu[c] -= nu;
                    sum_rho[c] -= rho;
                }
            }
        };
        rec(rec, 0);
        return ok;
    }
};

}  // namespace detail

struct GeneratorScan {
    std::vector<LatticeFunction> generators;       // sorted by (deg, values)
    std::map<long long, long long> per_degree;     // degree -> generator count
    bool truncated = false;                        // enumeration budget exceeded
};

inline GeneratorScan scan_generators(const VariantSystem& sys, long long n_max,
                                     size_t budget = 4'000'000) {
    if (n_max < 1) throw std::invalid_argument("generator scan needs n_max >= 1");
    GeneratorScan out;
    auto cs = components(sys.graph);
    int nc = (int)cs.components.size();
    std::vector<detail::ComponentTable> tabs(nc);
    for (int i = 0; i < nc; ++i) {
        tabs[i].sys = sys.restricted(cs.components[i]);
        tabs[i].verts = cs.components[i];
        tabs[i].init();
        tabs[i].ensure_degree(n_max);
    }

    auto assemble = [&](const std::vector<const std::vector<long long>*>& parts, long long d) {
        std::vector<long long> vals(sys.graph.n, 0);
        for (int i = 0; i < nc; ++i)
            for (size_t j = 0; j < tabs[i].verts.size(); ++j)
                vals[tabs[i].verts[j]] = (*parts[i])[j];
        out.generators.emplace_back(std::move(vals), d);
        ++out.per_degree[d];
    };

    // Degree 1: every degree-1 monomial is a generator.
    {
        std::vector<const std::vector<long long>*> parts(nc);
        auto rec = [&](auto&& self, int i) -> void {
            if (out.truncated) return;
            if (i == nc) {
                if (out.generators.size() >= budget) { out.truncated = true; return; }
                assemble(parts, 1);
                return;
            }
            for (const auto& e : tabs[i].slice[1]) {
                parts[i] = &e;
                self(self, i + 1);
                if (out.truncated) return;
            }
        };
        rec(rec, 0);
    }

    for (long long d = 2; d <= n_max && !out.truncated; ++d) {
        int nsplits = (int)(d / 2);  // splits (1,d-1), ..., (d/2, d-(d/2))
        uint32_t full = nsplits >= 32 ? ~0u : ((1u << nsplits) - 1);

        // per component: split-failure mask per slice element
        std::vector<std::vector<uint32_t>> mask(nc);
        std::vector<uint32_t> potential(nc, 0);
        uint32_t total_potential = 0;
        for (int i = 0; i < nc; ++i) {
            mask[i].assign(tabs[i].slice[d].size(), 0);
            for (size_t e = 0; e < tabs[i].slice[d].size(); ++e) {
                const auto& mu = tabs[i].slice[d][e];
                // split (a, b) succeeds outright with a zero part when mu is
                // already a ring monomial at degree b
                long long kmin = tabs[i].min_ring_degree(mu);
                if (kmin <= d - nsplits) continue;  // every split succeeds
                uint32_t m = 0;
                for (int s = 0; s < nsplits; ++s) {
                    long long b = d - (s + 1);  // b >= kmin splits as 0 + mu
                    if (b < kmin && !tabs[i].splittable(mu, s + 1, b)) m |= 1u << s;
                }
                mask[i][e] = m;
                potential[i] |= m;
            }
            total_potential |= potential[i];
        }
        if (total_potential != full) continue;  // some split always succeeds

        std::vector<int> order;  // components that can contribute failures first
        for (int i = 0; i < nc; ++i)
            if (potential[i]) order.push_back(i);
        std::vector<int> passive;
        for (int i = 0; i < nc; ++i)
            if (!potential[i]) passive.push_back(i);

        std::vector<uint32_t> rest_potential(order.size() + 1, 0);
        for (int i = (int)order.size() - 1; i >= 0; --i)
            rest_potential[i] = rest_potential[i + 1] | potential[order[i]];

        std::vector<const std::vector<long long>*> parts(nc);
        auto emit_passive = [&](auto&& self, size_t pi) -> void {
            if (out.truncated) return;
            if (pi == passive.size()) {
                if (out.generators.size() >= budget) { out.truncated = true; return; }
                assemble(parts, d);
                return;
            }
            int i = passive[pi];
            for (const auto& e : tabs[i].slice[d]) {
                parts[i] = &e;
                self(self, pi + 1);
                if (out.truncated) return;
            }
        };
        auto walk = [&](auto&& self, size_t oi, uint32_t covered) -> void {
            if (out.truncated) return;
            if ((covered | rest_potential[oi]) != full) return;
            if (oi == order.size()) {
                if (covered == full) emit_passive(emit_passive, 0);
                return;
            }
            int i = order[oi];
            for (size_t e = 0; e < tabs[i].slice[d].size(); ++e) {
                parts[i] = &tabs[i].slice[d][e];
                self(self, oi + 1, covered | mask[i][e]);
                if (out.truncated) return;
            }
        };
        walk(walk, 0, 0);
    }

    std::sort(out.generators.begin(), out.generators.end(),
              [](const LatticeFunction& a, const LatticeFunction& b) {
                  if (a.deg != b.deg) return a.deg < b.deg;
                  return a.values < b.values;
              });
    return out;
}

// All generators of degree 1..n_max. Throws if the enumeration budget is hit
// (callers that can report partial results use scan_generators directly).
inline std::vector<LatticeFunction> semigroup_generators(const VariantSystem& sys,
                                                         long long n_max) {
    auto scan = scan_generators(sys, n_max);
    if (scan.truncated) throw desk_scale_error("semigroup generator enumeration exceeded budget");
    return scan.generators;
}

// ---------------------------------------------------------------------------
// Canonical module, two ways: the degree-N slice of the first symbolic power
// versus the integer points strictly inside the N-th dilation of the
// polytope. The two sides are computed by unrelated code paths (integer
// constraint systems here, exact rational H-representation in the polytope
// module) and must agree exactly.
inline bool canonical_slice_cross_check(const Graph& g, Variant variant, long long N) {
    VariantSystem sys = VariantSystem::build(g, variant);
    std::vector<LatticeFunction> lhs = enumerate_slice(sys, 1, N);

    RationalPolytope p = build_polytope(g, variant);
    std::vector<LatticeFunction> rhs;
    // interior integer points have 1 <= x(v) <= N-1: x(v) > 0 is a listed
    // inequality and x(v) < N follows from the clique (or unit upper bound)
    // constraint containing v
    size_t m = p.ineqs.size();
    std::vector<std::vector<int>> at(g.n);
    for (size_t i = 0; i < m; ++i)
        for (int v = 0; v < g.n; ++v)
            if (!p.ineqs[i].a[v].is_zero()) at[v].push_back((int)i);
    // best_rest[i][v]: most favorable contribution of coordinates >= v,
    // each ranging over [1, N-1]
    std::vector<std::vector<Rat>> best_rest(m, std::vector<Rat>(g.n + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i)
        for (int v = g.n - 1; v >= 0; --v) {
            const Rat& c = p.ineqs[i].a[v];
            best_rest[i][v] =
                best_rest[i][v + 1] + (c < Rat(0) ? c * Rat(N - 1) : c * Rat(1));
        }
    std::vector<Rat> partial(m, Rat(0)), bound(m);
    for (size_t i = 0; i < m; ++i) bound[i] = p.ineqs[i].b * Rat(N);

    std::vector<long long> x(g.n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            rhs.emplace_back(x, N);  // all inequalities hold strictly
            return;
        }
        for (long long val = 1; val <= N - 1; ++val) {
            x[v] = val;
            bool feasible = true;
            for (int i : at[v]) {
                partial[i] += p.ineqs[i].a[v] * Rat(val);
                if (!(partial[i] + best_rest[i][v + 1] < bound[i])) feasible = false;
            }
            if (feasible) self(self, v + 1);
            for (int i : at[v]) partial[i] -= p.ineqs[i].a[v] * Rat(val);
        }
        x[v] = 0;
    };
    if (N >= 2) rec(rec, 0);

    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Segre-product identities on a disjoint union.

struct SegreReport {
    bool hilbert_multiplicative = true;
    bool canonical_multiplicative = true;
    bool a_invariant_min = true;
    bool canonical_nonvanishing = true;
    std::vector<std::string> mismatches;

    bool all_ok() const {
        return hilbert_multiplicative && canonical_multiplicative && a_invariant_min &&
               canonical_nonvanishing;
    }
};

// On G = g1 + g2 verifies, for N <= n_max: H_G(N) = H_1(N) * H_2(N), the
// canonical-slice sizes multiply the same way, a(G) = min(a_1, a_2), and the
// canonical slices of G are nonvanishing for every N >= -a(G) in the window.
inline SegreReport segre_checks(const Graph& g1, const Graph& g2, Variant variant,
                                long long n_max) {
    SegreReport rep;
    Graph g = disjoint_union(g1, g2);
    VariantSystem s = VariantSystem::build(g, variant);
    VariantSystem s1 = VariantSystem::build(g1, variant);
    VariantSystem s2 = VariantSystem::build(g2, variant);

    for (long long N = 0; N <= n_max; ++N) {
        long long h = slice_count(s, 0, N);
        long long h1 = slice_count(s1, 0, N);
        long long h2 = slice_count(s2, 0, N);
        if (h != h1 * h2) {
            rep.hilbert_multiplicative = false;
            rep.mismatches.push_back("H(" + std::to_string(N) + ") = " + std::to_string(h) +
                                     " != " + std::to_string(h1) + "*" + std::to_string(h2));
        }
        long long w = slice_count(s, 1, N);
        long long w1 = slice_count(s1, 1, N);
        long long w2 = slice_count(s2, 1, N);
        if (w != w1 * w2) {
            rep.canonical_multiplicative = false;
            rep.mismatches.push_back("omega(" + std::to_string(N) + ") = " + std::to_string(w) +
                                     " != " + std::to_string(w1) + "*" + std::to_string(w2));
        }
    }

    long long a = a_invariant(s), a1 = a_invariant(s1), a2 = a_invariant(s2);
    if (a != std::min(a1, a2)) {
        rep.a_invariant_min = false;
        rep.mismatches.push_back("a = " + std::to_string(a) + " != min(" + std::to_string(a1) +
                                 "," + std::to_string(a2) + ")");
    }

    for (long long N = -a; N <= std::max(n_max, -a + 4); ++N) {
        if (!slice_nonempty(s, 1, N)) {
            rep.canonical_nonvanishing = false;
            rep.mismatches.push_back("canonical slice empty at degree " + std::to_string(N) +
                                     " >= " + std::to_string(-a));
        }
    }
    return rep;
}

}  // namespace stabring

#endif
