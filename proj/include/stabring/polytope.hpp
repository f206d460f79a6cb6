#ifndef STABRING_POLYTOPE_HPP
#define STABRING_POLYTOPE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace stabring {

enum class Variant { HSTAB, QSTAB, TSTAB };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::HSTAB: return "hstab";
        case Variant::QSTAB: return "qstab";
        case Variant::TSTAB: return "tstab";
    }
    return "?";
}

enum class Provenance { NonNeg, Clique, KElement, UpperBound, OddHole };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::NonNeg: return "nonnegativity";
        case Provenance::Clique: return "clique";
        case Provenance::KElement: return "k-element";
        case Provenance::UpperBound: return "upper-bound";
        case Provenance::OddHole: return "odd-hole";
    }
    return "?";
}

// One inequality a.x <= b with exact rational data.
struct Inequality {
    std::vector<Rat> a;
    Rat b;
    Provenance tag;
};

// H-representation of an HSTAB/QSTAB/TSTAB polytope. No floating point
// anywhere in this module.
struct RationalPolytope {
    int dim = 0;
    std::vector<Inequality> ineqs;
};

namespace detail {

inline Inequality sum_leq(int dim, const std::vector<int>& verts, Rat bound, Provenance tag) {
    Inequality q;
    q.a.assign(dim, Rat(0));
    for (int v : verts) q.a[v] = Rat(1);
    q.b = bound;
    q.tag = tag;
    return q;
}

}  // namespace detail

// HSTAB: x >= 0, maximal-clique sums <= 1, chordless-odd-hole sums <= (len-1)/2.
// QSTAB: x >= 0, maximal-clique sums <= 1.
// TSTAB: x >= 0, x <= 1, maximal size-<=3-clique sums <= 1, hole sums as above.
// Hole inequalities are emitted only for chordless odd cycles of length >= 5;
// odd cycles with chords are implied by shorter odd cycles plus cliques.
inline RationalPolytope build_polytope(const Graph& g, Variant variant) {
    RationalPolytope p;
    p.dim = g.n;
    for (int v = 0; v < g.n; ++v) {
        Inequality q;
        q.a.assign(g.n, Rat(0));
        q.a[v] = Rat(-1);
        q.b = Rat(0);
        q.tag = Provenance::NonNeg;
        p.ineqs.push_back(std::move(q));
    }
    if (variant == Variant::TSTAB) {
        for (int v = 0; v < g.n; ++v)
            p.ineqs.push_back(detail::sum_leq(g.n, {v}, Rat(1), Provenance::UpperBound));
        for (auto& k : k_maximal_elements(g).members)
            if (k.size() >= 2)
                p.ineqs.push_back(detail::sum_leq(g.n, k, Rat(1), Provenance::KElement));
    } else {
        for (auto& k : maximal_cliques(g).members)
            p.ineqs.push_back(detail::sum_leq(g.n, k, Rat(1), Provenance::Clique));
    }
    if (variant != Variant::QSTAB) {
        for (auto& c : odd_holes(g).holes)
            p.ineqs.push_back(
                detail::sum_leq(g.n, c, Rat((long long)c.size() - 1, 2), Provenance::OddHole));
    }
    return p;
}

struct VertexSet {
    std::vector<std::vector<Rat>> points;  // canonically sorted, deduplicated
    std::vector<bool> integral;            // per point

    int fractional_count() const {
        int c = 0;
        for (bool b : integral) c += !b;
        return c;
    }
};

namespace detail {

// Solve the square integer system rows.x = rhs exactly: fraction-free
// Bareiss forward elimination (all divisions exact), rational back
// substitution. Returns false if singular. All inequality data of the
// stable-set systems is integral, so this is the hot path of the vertex
// enumeration.
inline bool solve_square_int(std::vector<std::vector<long long>>& m, std::vector<Rat>& x) {
    int d = (int)m.size();  // each row has d+1 entries, the last is the rhs
    long long prev = 1;
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        for (int r = k; r < d; ++r)
            if (m[r][k] != 0) { piv = r; break; }
        if (piv < 0) return false;
        std::swap(m[piv], m[k]);
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j <= d; ++j) {
                __int128 v = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                v /= prev;  // exact by the Bareiss identity
                if (v > INT64_MAX || v < INT64_MIN)
                    throw std::overflow_error("vertex solve exceeded 64-bit range");
                m[i][j] = (long long)v;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    x.assign(d, Rat(0));
    for (int r = d - 1; r >= 0; --r) {
        Rat acc{m[r][d]};
        for (int c = r + 1; c < d; ++c) acc -= Rat(m[r][c]) * x[c];
        x[r] = acc / Rat(m[r][r]);
    }
    return true;
}

inline bool solve_square(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
                         std::vector<Rat>& x) {
    int d = (int)rhs.size();
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return false;
        std::swap(rows[piv], rows[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < d; ++r) {
            if (rows[r][col].is_zero()) continue;
            Rat f = rows[r][col] / rows[col][col];
            for (int c = col; c < d; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    x.assign(d, Rat(0));
    for (int r = d - 1; r >= 0; --r) {
        Rat acc = rhs[r];
        for (int c = r + 1; c < d; ++c) acc -= rows[r][c] * x[c];
        x[r] = acc / rows[r][r];
    }
    return true;
}

inline bool point_satisfies(const RationalPolytope& p, const std::vector<Rat>& x) {
    for (const auto& q : p.ineqs) {
        Rat lhs(0);
        for (int i = 0; i < p.dim; ++i)
            if (!q.a[i].is_zero()) lhs += q.a[i] * x[i];
        if (lhs > q.b) return false;
    }
    return true;
}

inline bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

}  // namespace detail

// Exhaustive exact vertex enumeration: every rank-dim subset of active
// inequalities is solved and the solution kept iff it satisfies the whole
// system. Deduplicated by exact equality, sorted lexicographically, so the
// result does not depend on the inequality input order.
inline VertexSet enumerate_vertices(const RationalPolytope& p, int max_dim = 12) {
    if (p.dim > max_dim)
        throw desk_scale_error("vertex enumeration undecided at desk scale: dimension " +
                               std::to_string(p.dim) + " exceeds bound " + std::to_string(max_dim));
    int m = (int)p.ineqs.size();
    int d = p.dim;
    std::vector<int> pick(d);
    std::vector<std::vector<Rat>> found;

    bool integral_data = true;
    for (const auto& q : p.ineqs) {
        integral_data = integral_data && q.b.is_integer();
        for (const auto& c : q.a) integral_data = integral_data && c.is_integer();
    }

    if (integral_data) {
        std::vector<std::vector<long long>> a(m, std::vector<long long>(d));
        std::vector<long long> b(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < d; ++j) a[i][j] = p.ineqs[i].a[j].num;
            b[i] = p.ineqs[i].b.num;
        }
        std::vector<std::vector<long long>> mat(d, std::vector<long long>(d + 1));
        std::vector<Rat> x;
        std::vector<long long> num(d);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == d) {
                for (int i = 0; i < d; ++i) {
                    for (int j = 0; j < d; ++j) mat[i][j] = a[pick[i]][j];
                    mat[i][d] = b[pick[i]];
                }
                if (!detail::solve_square_int(mat, x)) return;
                // common-denominator form for fast integer feasibility checks
                long long den = 1;
                for (const auto& c : x) den = std::lcm(den, c.den);
                for (int j = 0; j < d; ++j) num[j] = x[j].num * (den / x[j].den);
                for (int i = 0; i < m; ++i) {
                    __int128 s = 0;
                    for (int j = 0; j < d; ++j)
                        if (a[i][j]) s += (__int128)a[i][j] * num[j];
                    if (s > (__int128)b[i] * den) return;
                }
                found.push_back(x);
                return;
            }
            for (int i = start; i <= m - (d - depth); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    } else {
        std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d));
        std::vector<Rat> rhs(d), x;
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == d) {
                for (int i = 0; i < d; ++i) {
                    rows[i] = p.ineqs[pick[i]].a;
                    rhs[i] = p.ineqs[pick[i]].b;
                }
                if (!detail::solve_square(rows, rhs, x)) return;
                if (detail::point_satisfies(p, x)) found.push_back(x);
                return;
            }
            for (int i = start; i <= m - (d - depth); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    std::sort(found.begin(), found.end(), detail::lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());

    VertexSet vs;
    vs.points = std::move(found);
    for (const auto& pt : vs.points) {
        bool integral = true;
        for (const auto& c : pt) integral = integral && c.is_integer();
        vs.integral.push_back(integral);
    }
    return vs;
}

namespace detail {

inline bool all_vertices_integral(const Graph& g, Variant v, int max_dim) {
    auto vs = enumerate_vertices(build_polytope(g, v), max_dim);
    for (bool b : vs.integral)
        if (!b) return false;
    return true;
}

}  // namespace detail

// STAB(G) equals the variant polytope iff every vertex of the latter is
// integral (an integral point of these systems is a 0/1 stable-set
// characteristic vector). Vertices of a product polytope are products of
// vertices, so the decision splits over connected components; the desk-scale
// bound applies per component.
inline Decision is_variant_exact(const Graph& g, Variant v, int max_dim = 12) {
    auto cs = components(g);
    for (const auto& comp : cs.components) {
        if ((int)comp.size() > max_dim) return Decision::Undecided;
        if (!detail::all_vertices_integral(induced_subgraph(g, comp), v, max_dim))
            return Decision::False;
    }
    return Decision::True;
}

inline Decision is_h_perfect(const Graph& g, int max_dim = 12) {
    return is_variant_exact(g, Variant::HSTAB, max_dim);
}

inline Decision is_t_perfect(const Graph& g, int max_dim = 12) {
    return is_variant_exact(g, Variant::TSTAB, max_dim);
}

// True iff x strictly satisfies every inequality of the dilation N*p,
// including x(v) > 0. For these full-dimensional polytopes that is exactly
// membership in the topological interior of N*p.
inline bool strict_interior(const RationalPolytope& p, const std::vector<Rat>& x, long long N) {
    for (const auto& q : p.ineqs) {
        Rat lhs(0);
        for (int i = 0; i < p.dim; ++i)
            if (!q.a[i].is_zero()) lhs += q.a[i] * x[i];
        if (!(lhs < q.b * Rat(N))) return false;
    }
    return true;
}

inline bool strict_interior(const RationalPolytope& p, const std::vector<long long>& x,
                            long long N) {
    std::vector<Rat> xr(x.size());
    for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    return strict_interior(p, xr, N);
}

// Plain-text export: one inequality per line "a1 ... an <= b".
inline std::string export_hrep(const RationalPolytope& p) {
    std::string s;
    for (const auto& q : p.ineqs) {
        for (int i = 0; i < p.dim; ++i) {
            if (i) s += ' ';
            s += q.a[i].str();
        }
        s += " <= " + q.b.str() + "  # " + provenance_name(q.tag) + "\n";
    }
    return s;
}

inline std::string export_vertices(const VertexSet& vs) {
    std::string s;
    for (size_t i = 0; i < vs.points.size(); ++i) {
        for (size_t j = 0; j < vs.points[i].size(); ++j) {
            if (j) s += ' ';
            s += vs.points[i][j].str();
        }
        s += vs.integral[i] ? "  # integral\n" : "  # fractional\n";
    }
    return s;
}

}  // namespace stabring

#endif
