#pragma once

// Structural classification: forks, keys, pre-forks, wings, tips.
// Every predicate returns all witnesses, computed exhaustively; downstream
// pruning correctness rests on that completeness.

#include "forkless/quiver.hpp"

#include <array>
#include <optional>
#include <tuple>

namespace forkless {

struct PreforkTriple {
    Vertex r;   // point of return
    Vertex k;   // k < kp
    Vertex kp;
    friend bool operator==(const PreforkTriple&, const PreforkTriple&) = default;
    friend auto operator<=>(const PreforkTriple&, const PreforkTriple&) = default;
};

struct WingWitness {
    Vertex k;   // point of return
    Vertex kp;
    friend bool operator==(const WingWitness&, const WingWitness&) = default;
    friend auto operator<=>(const WingWitness&, const WingWitness&) = default;
};

struct TipWitness {
    Vertex kp;  // point of return
    Vertex k;
    friend bool operator==(const TipWitness&, const TipWitness&) = default;
    friend auto operator<=>(const TipWitness&, const TipWitness&) = default;
};

using KeyPair = std::pair<Vertex, Vertex>;  // k < kp

namespace detail {

// Full subquiver on `keep` is abundant and acyclic.
template <class S>
bool abundant_acyclic_on(const Quiver<S>& q, const VertexList& keep) {
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            S m = q.matrix()(keep[a], keep[b]);
            if (m < S{0}) m = checked_neg(m);
            if (m < S{2}) return false;
        }
    return is_acyclic_on(q, keep);
}

inline VertexList all_but(Vertex n, Vertex drop) {
    VertexList out;
    out.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v)
        if (v != drop) out.push_back(v);
    return out;
}

inline VertexList all_but2(Vertex n, Vertex d1, Vertex d2) {
    VertexList out;
    out.reserve(n - 2);
    for (Vertex v = 0; v < n; ++v)
        if (v != d1 && v != d2) out.push_back(v);
    return out;
}

// Points of return of the restriction of q to `keep`, reported in the
// original vertex labels.
template <class S>
VertexList fork_returns_on(const Quiver<S>& q, const VertexList& keep) {
    VertexList out;
    const auto& m = q.matrix();
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            S w = m(keep[a], keep[b]);
            if (w < S{0}) w = checked_neg(w);
            if (w < S{2}) return {};  // not abundant
        }
    if (is_acyclic_on(q, keep)) return {};
    for (Vertex r : keep) {
        VertexList inward, outward;
        for (Vertex v : keep) {
            if (m(v, r) > S{0}) inward.push_back(v);
            if (m(r, v) > S{0}) outward.push_back(v);
        }
        bool ok = true;
        for (Vertex i : inward) {
            for (Vertex j : outward) {
                // need j -> i with f_ji > f_ir and f_ji > f_rj
                if (m(j, i) <= m(i, r) || m(j, i) <= m(r, j)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok && is_acyclic_on(q, inward) && is_acyclic_on(q, outward)) out.push_back(r);
    }
    return out;
}

// The displayed-triangle condition shared by wings and tips: whenever
// {k, i, k'} induces a directed 3-cycle (only possible with a single arrow
// between k and k'), the side touching k' must exceed the side touching k
// by at least 2.
template <class S>
bool triangle_condition(const Quiver<S>& q, Vertex k, Vertex kp) {
    const auto& m = q.matrix();
    if (m(k, kp) == S{0}) return true;
    for (Vertex i = 0; i < q.vertex_count(); ++i) {
        if (i == k || i == kp) continue;
        // k -> i -> k' -> k
        if (m(kp, k) > S{0} && m(k, i) > S{0} && m(i, kp) > S{0})
            if (m(i, kp) < checked_add(m(k, i), S{2})) return false;
        // k -> k' -> i -> k
        if (m(k, kp) > S{0} && m(kp, i) > S{0} && m(i, k) > S{0})
            if (m(kp, i) < checked_add(m(i, k), S{2})) return false;
    }
    return true;
}

}  // namespace detail

// All r such that q is abundant, non-acyclic, the dominance inequalities
// hold at r, and both neighborhoods of r induce acyclic subquivers.
// q is a fork iff the result is nonempty. All valid returns are reported;
// no uniqueness is assumed.
template <class S>
VertexList fork_points_of_return(const Quiver<S>& q) {
    VertexList all(q.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return detail::fork_returns_on(q, all);
}

// Unordered pairs {k,k'} with both deletions abundant acyclic and
// Q^k_{k'} empty.
template <class S>
std::vector<KeyPair> key_pairs(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    if (n < 3) throw too_few_vertices("key pairs need at least 3 vertices");
    std::vector<KeyPair> out;
    std::vector<char> aa(n);
    for (Vertex v = 0; v < n; ++v)
        aa[v] = detail::abundant_acyclic_on(q, detail::all_but(n, v));
    for (Vertex k = 0; k < n; ++k) {
        if (!aa[k]) continue;
        for (Vertex kp = k + 1; kp < n; ++kp)
            if (aa[kp] && q_set(q, k, kp).empty()) out.emplace_back(k, kp);
    }
    return out;
}

// Triples (r, {k,k'}) with both deletions forks sharing the return r and
// Q^k_{k'} empty.
template <class S>
std::vector<PreforkTriple> prefork_triples(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    if (n < 4) throw too_few_vertices("pre-fork triples need at least 4 vertices");
    std::vector<PreforkTriple> out;
    std::vector<std::optional<VertexList>> returns(n);
    auto returns_of = [&](Vertex drop) -> const VertexList& {
        if (!returns[drop])
            returns[drop] = detail::fork_returns_on(q, detail::all_but(n, drop));
        return *returns[drop];
    };
    for (Vertex k = 0; k < n; ++k)
        for (Vertex kp = k + 1; kp < n; ++kp) {
            if (!q_set(q, k, kp).empty()) continue;
            const VertexList& rk = returns_of(k);
            if (rk.empty()) continue;
            const VertexList& rkp = returns_of(kp);
            for (Vertex r : rk)
                if (std::find(rkp.begin(), rkp.end(), r) != rkp.end())
                    out.push_back({r, k, kp});
        }
    return out;
}

// Ordered pairs (k, k') with k the point of return: |q_kk'| < 2, every other
// vertex on a 2-path between k and k', Q\{k'} a fork with return k, Q\{k}
// abundant acyclic, and the triangle condition.
template <class S>
std::vector<WingWitness> wing_witnesses(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    if (n < 4) throw too_few_vertices("wing witnesses need at least 4 vertices");
    std::vector<WingWitness> out;
    for (Vertex k = 0; k < n; ++k)
        for (Vertex kp = 0; kp < n; ++kp) {
            if (k == kp) continue;
            S w = q.matrix()(k, kp);
            if (w < S{0}) w = checked_neg(w);
            if (w >= S{2}) continue;
            if (static_cast<Vertex>(q_set(q, k, kp).size()) != n - 2) continue;
            VertexList rets = detail::fork_returns_on(q, detail::all_but(n, kp));
            if (std::find(rets.begin(), rets.end(), k) == rets.end()) continue;
            if (!detail::abundant_acyclic_on(q, detail::all_but(n, k))) continue;
            if (!detail::triangle_condition(q, k, kp)) continue;
            out.push_back({k, kp});
        }
    return out;
}

// Ordered pairs (k', k) with k' the point of return, per the tip definition
// including the case split on the k-k' multiplicity.
template <class S>
std::vector<TipWitness> tip_witnesses(const Quiver<S>& q) {
    const Vertex n = q.vertex_count();
    if (n < 4) throw too_few_vertices("tip witnesses need at least 4 vertices");
    std::vector<TipWitness> out;
    const auto& m = q.matrix();
    for (Vertex kp = 0; kp < n; ++kp)
        for (Vertex k = 0; k < n; ++k) {
            if (k == kp) continue;
            const S t = m(k, kp);
            S ta = t < S{0} ? checked_neg(t) : t;
            if (ta >= S{2}) continue;
            VertexList rets = detail::fork_returns_on(q, detail::all_but(n, k));
            if (std::find(rets.begin(), rets.end(), kp) == rets.end()) continue;
            VertexList qs = q_set(q, k, kp);
            if (t == S{0}) {
                if (!qs.empty()) continue;
                VertexList rets2 = detail::fork_returns_on(q, detail::all_but(n, kp));
                if (std::find(rets2.begin(), rets2.end(), k) == rets2.end()) continue;
            } else {
                // t < 0: single arrow k' -> k, expect Q^k_{k'} = T^-(k');
                // t > 0: single arrow k  -> k', expect Q^k_{k'} = T^+(k').
                VertexList expect;
                for (Vertex v = 0; v < n; ++v) {
                    if (t < S{0} && m(v, kp) > S{0}) expect.push_back(v);
                    if (t > S{0} && m(kp, v) > S{0}) expect.push_back(v);
                }
                if (qs != expect || qs.empty()) continue;
                VertexList keep = detail::all_but(n, kp);
                if (!detail::abundant_acyclic_on(q, keep)) continue;
                // k a source in T\{k'} when k'->k, a sink when k->k'
                bool ok = true;
                for (Vertex v : keep) {
                    if (v == k) continue;
                    if (t < S{0} && m(k, v) < S{0}) ok = false;  // needs source
                    if (t > S{0} && m(k, v) > S{0}) ok = false;  // needs sink
                }
                if (!ok) continue;
            }
            if (!detail::triangle_condition(q, k, kp)) continue;
            out.push_back({kp, k});
        }
    return out;
}

// ---- report ------------------------------------------------------------------

enum class QuiverClass {
    Fork,
    Prefork,
    Key,
    Wing,
    Tip,
    AbundantAcyclic,
    Acyclic,
    Other,
};

inline const char* to_string(QuiverClass c) {
    switch (c) {
        case QuiverClass::Fork: return "fork";
        case QuiverClass::Prefork: return "pre-fork";
        case QuiverClass::Key: return "key";
        case QuiverClass::Wing: return "wing";
        case QuiverClass::Tip: return "tip";
        case QuiverClass::AbundantAcyclic: return "abundant-acyclic";
        case QuiverClass::Acyclic: return "acyclic";
        case QuiverClass::Other: return "other";
    }
    return "?";
}

struct ClassificationReport {
    bool acyclic = false;
    bool abundant = false;
    VertexList fork_returns;
    std::vector<KeyPair> key_pairs;
    std::vector<PreforkTriple> prefork_triples;
    std::vector<WingWitness> wing_witnesses;
    std::vector<TipWitness> tip_witnesses;

    bool is_fork() const { return !fork_returns.empty(); }
    bool is_prefork() const { return !prefork_triples.empty(); }
    bool is_key() const { return !key_pairs.empty(); }
    bool is_wing() const { return !wing_witnesses.empty(); }
    bool is_tip() const { return !tip_witnesses.empty(); }
    // No fork, pre-fork, wing, or tip witness: a valid seed for
    // pre-forkless exploration.
    bool plain() const { return !is_fork() && !is_prefork() && !is_wing() && !is_tip(); }
    bool boundary() const { return is_fork() || is_prefork(); }

    // Most specific first; every abundant acyclic quiver is also a key, so
    // the abundant-acyclic label wins over the plain key label.
    QuiverClass dominant_class() const {
        if (is_fork()) return QuiverClass::Fork;
        if (is_prefork()) return QuiverClass::Prefork;
        if (abundant && acyclic) return QuiverClass::AbundantAcyclic;
        if (is_key()) return QuiverClass::Key;
        if (is_wing()) return QuiverClass::Wing;
        if (is_tip()) return QuiverClass::Tip;
        if (acyclic) return QuiverClass::Acyclic;
        return QuiverClass::Other;
    }

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Runs every predicate; predicates whose vertex-count precondition fails
// contribute empty witness sets.
template <class S>
ClassificationReport classify(const Quiver<S>& q) {
    ClassificationReport r;
    r.acyclic = is_acyclic(q);
    r.abundant = is_abundant(q);
    r.fork_returns = fork_points_of_return(q);
    const Vertex n = q.vertex_count();
    if (n >= 3) r.key_pairs = key_pairs(q);
    if (n >= 4) {
        r.prefork_triples = prefork_triples(q);
        r.wing_witnesses = wing_witnesses(q);
        r.tip_witnesses = tip_witnesses(q);
    }
    return r;
}

}  // namespace forkless
