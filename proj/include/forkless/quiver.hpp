#pragma once

// Core quiver type: a labelled directed multigraph with no loops and no
// 2-cycles, stored as a skew-symmetric integer multiplicity matrix.
// mult(i,j) > 0 means mult(i,j) arrows i -> j; the matrix determines the
// quiver exactly and is the identity used throughout (labelled classes,
// no isomorphism quotient).
//
// All multiplicity arithmetic is overflow-checked; overflow throws
// multiplicity_overflow instead of wrapping.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forkless {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using MutationSeq = std::vector<Vertex>;

struct quiver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct loop_arrow : quiver_error {
    using quiver_error::quiver_error;
};
struct conflicting_pair : quiver_error {
    using quiver_error::quiver_error;
};
struct index_out_of_range : quiver_error {
    using quiver_error::quiver_error;
};
struct multiplicity_overflow : quiver_error {
    using quiver_error::quiver_error;
};
struct empty_vertex_set : quiver_error {
    using quiver_error::quiver_error;
};
struct equal_vertices : quiver_error {
    using quiver_error::quiver_error;
};
struct invalid_permutation : quiver_error {
    using quiver_error::quiver_error;
};
struct cyclic_error : quiver_error {
    using quiver_error::quiver_error;
};
struct too_few_vertices : quiver_error {
    using quiver_error::quiver_error;
};
struct precondition_error : quiver_error {
    using quiver_error::quiver_error;
};

// ---- checked integer arithmetic -------------------------------------------

template <class S>
inline S checked_add(S a, S b) {
    if constexpr (std::is_integral_v<S>) {
        S r;
        if (__builtin_add_overflow(a, b, &r))
            throw multiplicity_overflow("multiplicity overflow in addition");
        return r;
    } else {
        return a + b;
    }
}

template <class S>
inline S checked_mul(S a, S b) {
    if constexpr (std::is_integral_v<S>) {
        S r;
        if (__builtin_mul_overflow(a, b, &r))
            throw multiplicity_overflow("multiplicity overflow in multiplication");
        return r;
    } else {
        return a * b;
    }
}

template <class S>
inline S checked_neg(S a) {
    if constexpr (std::is_integral_v<S>) {
        S r;
        if (__builtin_sub_overflow(S{0}, a, &r))
            throw multiplicity_overflow("multiplicity overflow in negation");
        return r;
    } else {
        return -a;
    }
}

// ---- quiver ----------------------------------------------------------------

template <class S>
struct Arrow {
    Vertex from;
    Vertex to;
    S mult;
};

template <class Scalar = std::int64_t>
class Quiver {
public:
    using scalar_type = Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit Quiver(Matrix m) : mult_(std::move(m)) {
        if (mult_.rows() != mult_.cols())
            throw quiver_error("multiplicity matrix must be square");
        for (Eigen::Index i = 0; i < mult_.rows(); ++i) {
            if (mult_(i, i) != Scalar{0})
                throw loop_arrow("nonzero diagonal entry (loop)");
            for (Eigen::Index j = 0; j < i; ++j)
                if (mult_(i, j) != checked_neg(mult_(j, i)))
                    throw quiver_error("multiplicity matrix must be skew-symmetric");
        }
    }

    static Quiver empty(Vertex n) {
        if (n < 0) throw index_out_of_range("negative vertex count");
        return Quiver(Matrix::Zero(n, n));
    }

    static Quiver from_arrows(Vertex n, const std::vector<Arrow<Scalar>>& arrows) {
        if (n < 0) throw index_out_of_range("negative vertex count");
        Matrix m = Matrix::Zero(n, n);
        for (const auto& a : arrows) {
            if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
                throw index_out_of_range("arrow endpoint out of range");
            if (a.from == a.to)
                throw loop_arrow("loop arrow at vertex " + std::to_string(a.from));
            if (a.mult <= Scalar{0})
                throw quiver_error("arrow multiplicity must be positive");
            if (m(a.from, a.to) != Scalar{0})
                throw conflicting_pair("two arrow entries for the same vertex pair");
            m(a.from, a.to) = a.mult;
            m(a.to, a.from) = checked_neg(a.mult);
        }
        return Quiver(std::move(m));
    }

    Vertex vertex_count() const { return static_cast<Vertex>(mult_.rows()); }

    Scalar mult(Vertex i, Vertex j) const {
        check_vertex(i);
        check_vertex(j);
        return mult_(i, j);
    }

    const Matrix& matrix() const { return mult_; }

    // Positively-directed arrows (i, j, m) with m > 0, scanned row-major.
    std::vector<Arrow<Scalar>> arrows() const {
        std::vector<Arrow<Scalar>> out;
        const Vertex n = vertex_count();
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (mult_(i, j) > Scalar{0}) out.push_back({i, j, mult_(i, j)});
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count())
            throw index_out_of_range("vertex index " + std::to_string(v) +
                                     " out of range for n=" + std::to_string(vertex_count()));
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.mult_.rows() == b.mult_.rows() && a.mult_ == b.mult_;
    }
    friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

private:
    Matrix mult_;
};

template <class Scalar>
struct QuiverHash {
    std::size_t operator()(const Quiver<Scalar>& q) const {
        // splitmix64-style mix over all coefficients
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(q.vertex_count());
        const auto& m = q.matrix();
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                std::uint64_t x = static_cast<std::uint64_t>(m(i, j)) + 0x9e3779b97f4a7c15ull + h;
                x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
                x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
                h = x ^ (x >> 31);
            }
        return static_cast<std::size_t>(h);
    }
};

// ---- mutation ---------------------------------------------------------------

// mu_v: q'_ij = -q_ij when v in {i,j}, else q_ij + sign(q_iv) * max(q_iv*q_vj, 0).
// Equivalent to the arrow-level rule: compose 2-paths through v, flip arrows
// at v, cancel the 2-cycles formed.
template <class S>
Quiver<S> mutate(const Quiver<S>& q, Vertex v) {
    q.check_vertex(v);
    const Vertex n = q.vertex_count();
    typename Quiver<S>::Matrix out = q.matrix();
    for (Vertex i = 0; i < n; ++i) {
        if (i == v) {
            for (Vertex j = 0; j < n; ++j) out(i, j) = checked_neg(out(i, j));
            continue;
        }
        for (Vertex j = 0; j < n; ++j) {
            if (j == v) {
                out(i, j) = checked_neg(out(i, j));
            } else if (i != j) {
                const S a = q.matrix()(i, v);
                const S b = q.matrix()(v, j);
                if ((a > S{0} && b > S{0}) || (a < S{0} && b < S{0})) {
                    S p = checked_mul(a, b);
                    if (a < S{0}) p = checked_neg(p);
                    out(i, j) = checked_add(out(i, j), p);
                }
            }
        }
    }
    return Quiver<S>(std::move(out));
}

// Deletes adjacent equal pairs until none remain (unique normal form).
inline MutationSeq reduce_sequence(const MutationSeq& w) {
    MutationSeq out;
    for (Vertex v : w) {
        if (!out.empty() && out.back() == v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

// Left-to-right fold of mutate over the reduced sequence.
template <class S>
Quiver<S> mutate_seq(const Quiver<S>& q, const MutationSeq& w) {
    Quiver<S> cur = q;
    for (Vertex v : reduce_sequence(w)) cur = mutate(cur, v);
    return cur;
}

// ---- structural queries -----------------------------------------------------

template <class S>
S arrow_count(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    S total{0};
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            S m = q.matrix()(i, j);
            if (m < S{0}) m = checked_neg(m);
            total = checked_add(total, m);
        }
    return total;
}

template <class S>
S max_multiplicity(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    S mx{0};
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            S m = q.matrix()(i, j);
            if (m < S{0}) m = checked_neg(m);
            mx = std::max(mx, m);
        }
    return mx;
}

struct Neighborhoods {
    VertexList inward;   // i with arrows i -> r
    VertexList outward;  // j with arrows r -> j
};

template <class S>
Neighborhoods neighborhoods(const Quiver<S>& q, Vertex r) {
    q.check_vertex(r);
    Neighborhoods nb;
    for (Vertex i = 0; i < q.vertex_count(); ++i) {
        if (q.matrix()(i, r) > S{0}) nb.inward.push_back(i);
        if (q.matrix()(r, i) > S{0}) nb.outward.push_back(i);
    }
    return nb;
}

// Q^k_{k'} = [Q+(k) ∩ Q-(k')] ∪ [Q+(k') ∩ Q-(k)]: vertices on a directed
// 2-path between k and k' (in either direction).
template <class S>
VertexList q_set(const Quiver<S>& q, Vertex k, Vertex kp) {
    q.check_vertex(k);
    q.check_vertex(kp);
    if (k == kp) throw equal_vertices("q_set needs two distinct vertices");
    VertexList out;
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
        if (v == k || v == kp) continue;
        const auto& m = q.matrix();
        if ((m(k, v) > S{0} && m(v, kp) > S{0}) || (m(kp, v) > S{0} && m(v, k) > S{0}))
            out.push_back(v);
    }
    return out;
}

template <class S>
bool is_sink(const Quiver<S>& q, Vertex v) {
    q.check_vertex(v);
    for (Vertex j = 0; j < q.vertex_count(); ++j)
        if (q.matrix()(v, j) > S{0}) return false;
    return true;
}

template <class S>
bool is_source(const Quiver<S>& q, Vertex v) {
    q.check_vertex(v);
    for (Vertex j = 0; j < q.vertex_count(); ++j)
        if (q.matrix()(v, j) < S{0}) return false;
    return true;
}

template <class S>
bool is_abundant(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            S m = q.matrix()(i, j);
            if (m < S{0}) m = checked_neg(m);
            if (m < S{2}) return false;
        }
    return true;
}

// Acyclicity of the direction digraph restricted to `verts` (Kahn).
template <class S>
bool is_acyclic_on(const Quiver<S>& q, const VertexList& verts) {
    const std::size_t k = verts.size();
    std::vector<int> indeg(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (q.matrix()(verts[a], verts[b]) > S{0}) ++indeg[b];
    std::vector<std::size_t> stack;
    for (std::size_t a = 0; a < k; ++a)
        if (indeg[a] == 0) stack.push_back(a);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        ++seen;
        for (std::size_t b = 0; b < k; ++b)
            if (q.matrix()(verts[a], verts[b]) > S{0} && --indeg[b] == 0) stack.push_back(b);
    }
    return seen == k;
}

template <class S>
bool is_acyclic(const Quiver<S>& q) {
    VertexList all(q.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return is_acyclic_on(q, all);
}

struct AcyclicOrdering {
    VertexList order;
    bool unique;  // true iff exactly one source existed at every elimination step
};

template <class S>
AcyclicOrdering acyclic_ordering(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    std::vector<int> indeg(n, 0);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (q.matrix()(i, j) > S{0}) ++indeg[j];
    std::vector<bool> used(n, false);
    AcyclicOrdering res;
    res.unique = true;
    for (Vertex step = 0; step < n; ++step) {
        VertexList sources;
        for (Vertex v = 0; v < n; ++v)
            if (!used[v] && indeg[v] == 0) sources.push_back(v);
        if (sources.empty()) throw cyclic_error("quiver has a directed cycle");
        if (sources.size() > 1) res.unique = false;
        const Vertex v = sources.front();
        used[v] = true;
        res.order.push_back(v);
        for (Vertex j = 0; j < n; ++j)
            if (q.matrix()(v, j) > S{0}) --indeg[j];
    }
    return res;
}

template <class S>
std::vector<VertexList> connected_components(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexList> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            Vertex u = comp[head];
            for (Vertex v = 0; v < n; ++v)
                if (!seen[v] && q.matrix()(u, v) != S{0}) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

template <class S>
bool is_connected(const Quiver<S>& q) {
    return q.vertex_count() <= 1 || connected_components(q).size() == 1;
}

// Restriction to `keep`, re-indexed densely in increasing original order.
// index_map[new] = original vertex.
template <class S>
struct Subquiver {
    Quiver<S> quiver;
    VertexList index_map;
};

template <class S>
Subquiver<S> full_subquiver(const Quiver<S>& q, const VertexList& keep) {
    if (keep.empty()) throw empty_vertex_set("full subquiver of the empty vertex set");
    VertexList sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) q.check_vertex(v);
    const Vertex m = static_cast<Vertex>(sorted.size());
    typename Quiver<S>::Matrix sub(m, m);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < m; ++b) sub(a, b) = q.matrix()(sorted[a], sorted[b]);
    return {Quiver<S>(std::move(sub)), std::move(sorted)};
}

template <class S>
Quiver<S> delete_vertex_quiver(const Quiver<S>& q, Vertex drop) {
    VertexList keep;
    for (Vertex v = 0; v < q.vertex_count(); ++v)
        if (v != drop) keep.push_back(v);
    return full_subquiver(q, keep).quiver;
}

// b_{perm(i),perm(j)} == a_{i,j} for all i, j.
template <class S>
bool equal_under_permutation(const Quiver<S>& a, const Quiver<S>& b, const VertexList& perm) {
    const Vertex n = a.vertex_count();
    if (b.vertex_count() != n) throw invalid_permutation("vertex counts differ");
    if (static_cast<Vertex>(perm.size()) != n)
        throw invalid_permutation("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (Vertex v : perm) {
        if (v < 0 || v >= n || hit[v]) throw invalid_permutation("not a bijection on 0..n-1");
        hit[v] = true;
    }
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (b.matrix()(perm[i], perm[j]) != a.matrix()(i, j)) return false;
    return true;
}

inline VertexList transposition(Vertex n, Vertex i, Vertex j) {
    VertexList perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[j]);
    return perm;
}

}  // namespace forkless
