#pragma once

// Seeded deterministic generators for the structured quiver families used by
// the claim and property suites. Construction recipes:
//   abundant acyclic: random total order, every pair joined forward with
//                     multiplicity in [lo, hi]
//   key:              acyclic order with k, k' adjacent and matching arrow
//                     directions towards every other vertex; |q_kk'| <= 1
//   fork:             mutate an abundant acyclic quiver at a mid vertex
//   pre-fork:         mutate a key at r not in {k,k'}, r not a sink/source
//   wing / tip:       mutate a key at k / along [k, k']

#include "forkless/classify.hpp"
#include "forkless/quiver.hpp"

#include <random>

namespace forkless {

using Rng = std::mt19937_64;

template <class S = std::int64_t>
Quiver<S> random_abundant_acyclic(Rng& rng, Vertex n, long long lo = 3, long long hi = 6) {
    VertexList order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<long long> mult(lo, hi);
    std::vector<Arrow<S>> arrows;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            arrows.push_back({order[a], order[b], static_cast<S>(mult(rng))});
    return Quiver<S>::from_arrows(n, arrows);
}

template <class S = std::int64_t>
struct GeneratedKey {
    Quiver<S> quiver;
    Vertex k;
    Vertex kp;
};

// |q_kk'| = kk_mult (0 or 1); the pair sits at a random adjacent position of
// the acyclic order, with a random internal direction when kk_mult = 1.
template <class S = std::int64_t>
GeneratedKey<S> random_key(Rng& rng, Vertex n, int kk_mult, long long lo = 3, long long hi = 6) {
    if (n < 3) throw too_few_vertices("keys need at least 3 vertices");
    VertexList order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> pos(0, n - 2);
    const int p = pos(rng);
    const Vertex k = order[p], kp = order[p + 1];
    std::uniform_int_distribution<long long> mult(lo, hi);
    std::vector<Arrow<S>> arrows;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            const Vertex u = order[a], v = order[b];
            if ((u == k && v == kp) || (u == kp && v == k)) {
                if (kk_mult != 0) arrows.push_back({u, v, S{1}});
            } else {
                arrows.push_back({u, v, static_cast<S>(mult(rng))});
            }
        }
    return {Quiver<S>::from_arrows(n, arrows), k, kp};
}

// A key whose k and k' are both internal (neither a sink nor a source), so
// that mutation at k yields a wing and at [k,k'] a tip.
template <class S = std::int64_t>
GeneratedKey<S> random_key_internal_pair(Rng& rng, Vertex n, int kk_mult,
                                         long long lo = 3, long long hi = 6) {
    if (n < 4) throw too_few_vertices("an internal pair needs at least 4 vertices");
    for (;;) {
        auto key = random_key<S>(rng, n, kk_mult, lo, hi);
        if (!is_sink(key.quiver, key.k) && !is_source(key.quiver, key.k) &&
            !is_sink(key.quiver, key.kp) && !is_source(key.quiver, key.kp))
            return key;
    }
}

template <class S = std::int64_t>
struct GeneratedFork {
    Quiver<S> quiver;
    Vertex point_of_return;
};

template <class S = std::int64_t>
GeneratedFork<S> random_fork(Rng& rng, Vertex n, long long lo = 3, long long hi = 6) {
    if (n < 3) throw too_few_vertices("forks need at least 3 vertices");
    for (;;) {
        Quiver<S> q = random_abundant_acyclic<S>(rng, n, lo, hi);
        std::uniform_int_distribution<int> pick(0, n - 1);
        Vertex v = pick(rng);
        if (is_sink(q, v) || is_source(q, v)) continue;
        return {mutate(q, v), v};
    }
}

template <class S = std::int64_t>
struct GeneratedPrefork {
    Quiver<S> quiver;
    Vertex r;
    Vertex k;
    Vertex kp;
};

template <class S = std::int64_t>
GeneratedPrefork<S> random_prefork(Rng& rng, Vertex n, int kk_mult, long long lo = 3,
                                   long long hi = 6) {
    if (n < 4) throw too_few_vertices("pre-forks need at least 4 vertices");
    for (;;) {
        auto key = random_key<S>(rng, n, kk_mult, lo, hi);
        VertexList cands;
        for (Vertex r = 0; r < n; ++r)
            if (r != key.k && r != key.kp && !is_sink(key.quiver, r) &&
                !is_source(key.quiver, r))
                cands.push_back(r);
        if (cands.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
        Vertex r = cands[pick(rng)];
        return {mutate(key.quiver, r), r, key.k, key.kp};
    }
}

template <class S = std::int64_t>
struct GeneratedWing {
    Quiver<S> quiver;
    Vertex k;   // point of return
    Vertex kp;
};

template <class S = std::int64_t>
GeneratedWing<S> random_wing(Rng& rng, Vertex n, int kk_mult, long long lo = 3,
                             long long hi = 6) {
    auto key = random_key_internal_pair<S>(rng, n, kk_mult, lo, hi);
    return {mutate(key.quiver, key.k), key.k, key.kp};
}

template <class S = std::int64_t>
struct GeneratedTip {
    Quiver<S> quiver;
    Vertex kp;  // point of return
    Vertex k;
};

template <class S = std::int64_t>
GeneratedTip<S> random_tip(Rng& rng, Vertex n, int kk_mult, long long lo = 3,
                           long long hi = 6) {
    auto key = random_key_internal_pair<S>(rng, n, kk_mult, lo, hi);
    return {mutate_seq(key.quiver, {key.k, key.kp}), key.kp, key.k};
}

// Arbitrary small quiver (not structured); used by algebraic property suites.
template <class S = std::int64_t>
Quiver<S> random_quiver(Rng& rng, Vertex n, long long max_mult = 4, double density = 0.7) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long long> mult(1, max_mult);
    std::vector<Arrow<S>> arrows;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin(rng) > density) continue;
            Vertex from = i, to = j;
            if (coin(rng) < 0.5) std::swap(from, to);
            arrows.push_back({from, to, static_cast<S>(mult(rng))});
        }
    return Quiver<S>::from_arrows(n, arrows);
}

}  // namespace forkless
