#pragma once

// Definitions of the builtin claims. Separate from verify.hpp only to keep
// the registry readable; include verify.hpp, not this file.

#include "forkless/verify.hpp"

#include <cstdlib>

namespace forkless {

namespace verify_detail {

// --- algebraic identity suites ---------------------------------------------------

inline ClaimOutcome claim_involution(const Budget&) {
    Rng rng(kSeedBase + 1);
    return counted_cases(kPropertyCases, [&](int) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        Q64 q = random_quiver(rng, n);
        Vertex v = static_cast<Vertex>(rng() % n);
        return same_matrix(mutate(mutate(q, v), v), q);
    });
}

inline ClaimOutcome claim_invariants_preserved(const Budget&) {
    Rng rng(kSeedBase + 2);
    return counted_cases(kPropertyCases, [&](int) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        Q64 q = random_quiver(rng, n);
        Vertex v = static_cast<Vertex>(rng() % n);
        Q64 m = mutate(q, v);
        for (Vertex i = 0; i < n; ++i) {
            if (m.matrix()(i, i) != 0) return false;
            for (Vertex j = 0; j < n; ++j)
                if (m.matrix()(i, j) != -m.matrix()(j, i)) return false;
        }
        return true;
    });
}

inline ClaimOutcome claim_no_arrow_identity(const Budget&) {
    Rng rng(kSeedBase + 3);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 3 + static_cast<Vertex>(rng() % 4);
        Q64 q = random_quiver(rng, n, 4, 0.5);
        Vertex i = static_cast<Vertex>(rng() % n), j = static_cast<Vertex>(rng() % n);
        if (i == j || q.matrix()(i, j) != 0) continue;
        ++total;
        if (same_matrix(mutate_seq(q, {i, j, i, j}), q) &&
            same_matrix(mutate_seq(q, {j, i, j, i}), q))
            ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_single_arrow_swap(const Budget&) {
    Rng rng(kSeedBase + 4);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        Q64 q = random_quiver(rng, n, 3, 0.8);
        Vertex i = static_cast<Vertex>(rng() % n), j = static_cast<Vertex>(rng() % n);
        if (i == j || std::abs(q.matrix()(i, j)) != 1) continue;
        ++total;
        Q64 a = mutate_seq(q, {i, j, i, j, i});
        Q64 b = mutate_seq(q, {j, i, j, i, j});
        if (same_matrix(a, b) &&
            equal_under_permutation(a, q, transposition(n, i, j)))
            ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_sink_source_mutation(const Budget&) {
    Rng rng(kSeedBase + 5);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        Q64 q = random_quiver(rng, n, 4, 0.6);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (!is_sink(q, v) && !is_source(q, v)) continue;
        ++total;
        Q64 m = mutate(q, v);
        bool ok = arrow_count(m) == arrow_count(q);
        for (Vertex i = 0; i < n && ok; ++i)
            for (Vertex j = 0; j < n && ok; ++j) {
                if (i == v || j == v)
                    ok = m.matrix()(i, j) == -q.matrix()(i, j);
                else
                    ok = m.matrix()(i, j) == q.matrix()(i, j);
            }
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

// --- classification of the worked examples ---------------------------------------

inline ClaimOutcome claim_mutate_cycle345(const Budget&) {
    Q64 got = mutate(examples::cycle345().quiver, 1);
    Q64 want = Q64::from_arrows(3, {{1, 0, 3}, {2, 1, 4}, {0, 2, 7}});
    return {"j->i:3 k->j:4 i->k:7", same_matrix(got, want) ? "j->i:3 k->j:4 i->k:7"
                                                           : "different matrix"};
}

inline ClaimOutcome claim_classify_fork_def(const Budget&) {
    auto rep = classify(examples::fork_def().quiver);
    std::ostringstream obs;
    obs << "returns={";
    for (Vertex r : rep.fork_returns) obs << r;
    obs << "}";
    return {"returns={1}", obs.str()};
}

inline ClaimOutcome claim_classify_preforks(const Budget&) {
    auto r1 = classify(examples::prefork1().quiver);
    auto r2 = classify(examples::prefork2().quiver);
    auto has = [](const ClassificationReport& r) {
        return r.prefork_triples.size() == 1 && r.prefork_triples[0] == PreforkTriple{1, 2, 3} &&
               !r.is_fork();
    };
    std::string obs = has(r1) && has(r2) ? "both have triple (l,{k,kp}) and no fork witness"
                                         : "unexpected classification";
    return {"both have triple (l,{k,kp}) and no fork witness", obs};
}

inline ClaimOutcome claim_key_orderings(const Budget&) {
    Rng rng(kSeedBase + 6);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 3 + static_cast<Vertex>(rng() % 4);
        int kk = total % 2;
        auto key = random_key(rng, n, kk);
        ++total;
        auto ord = acyclic_ordering(key.quiver);
        if (kk == 0) {
            // exactly the k/k' ambiguity: non-unique, and the two vertices
            // are adjacent in the reported order
            auto it = std::find(ord.order.begin(), ord.order.end(), key.k);
            auto jt = std::find(ord.order.begin(), ord.order.end(), key.kp);
            if (!ord.unique && std::abs(it - jt) == 1) ++good;
        } else {
            if (ord.unique) ++good;
        }
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_abundant_acyclic_ordering(const Budget&) {
    Rng rng(kSeedBase + 7);
    return counted_cases(kPropertyCases, [&](int) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 6);
        Q64 q = random_abundant_acyclic(rng, n);
        auto ord = acyclic_ordering(q);
        if (!ord.unique) return false;
        // v1 the only source, vn the only sink
        return is_source(q, ord.order.front()) && is_sink(q, ord.order.back());
    });
}

// --- parts of the worked examples -------------------------------------------------

inline ClaimOutcome claim_forkless_cycle345(const Budget& b) {
    return {"empty", part_summary(forkless_part(examples::cycle345().quiver, b))};
}

inline ClaimOutcome claim_forkless_fork_def(const Budget& b) {
    // same labelled quiver as the (3,4,5)-cycle up to renaming: the return
    // walk closes on two forks (frozen from the brute-force oracle)
    auto res = forkless_part(examples::fork_def().quiver, b);
    std::ostringstream obs;
    obs << part_summary(res);
    if (res.escape) obs << " escape-visited:" << res.escape->visited;
    return {"empty escape-visited:2", obs.str()};
}

inline ClaimOutcome claim_forkless_14(const Budget& b) {
    return {"finite:14", part_summary(forkless_part(examples::forkless14().quiver, b))};
}

inline ClaimOutcome claim_forkless_two_nonfork(const Budget& b) {
    return {"finite:2", part_summary(forkless_part(examples::two_nonfork().quiver, b))};
}

inline ClaimOutcome claim_escape_14_sub_ijk(const Budget& b) {
    // {i,j,k} face of the 14-element example: a fork whose return walk finds
    // an abundant acyclic quiver after [j,k,j,i,j] (frozen from the oracle)
    auto sub = full_subquiver(examples::forkless14().quiver, {0, 1, 2});
    auto esc = escape_fork_region(sub.quiver, b);
    std::ostringstream obs;
    if (esc.status == EscapeStatus::Found) {
        obs << "found:[";
        for (std::size_t i = 0; i < esc.sequence.size(); ++i)
            obs << (i ? "," : "") << esc.sequence[i];
        obs << ']';
        auto rep = classify(*esc.found);
        if (rep.abundant && rep.acyclic) obs << " abundant-acyclic";
    } else {
        obs << "not found";
    }
    return {"found:[1,2,1,0,1] abundant-acyclic", obs.str()};
}

inline ClaimOutcome claim_forkless_path222_budget(const Budget& b) {
    Budget small = b;
    small.max_nodes = std::min<std::size_t>(b.max_nodes, 20000);
    return {"budget-exceeded", part_summary(forkless_part(examples::path222().quiver, small))};
}

inline ClaimOutcome claim_path222_alternating(const Budget&) {
    // alternating mutations at k and l produce a new distinct non-fork at
    // every one of 12 steps
    Q64 cur = examples::path222().quiver;
    std::vector<Q64> seen{cur};
    int good = 0;
    for (int step = 0; step < 12; ++step) {
        cur = mutate(cur, step % 2 == 0 ? 2 : 3);
        bool fresh = std::find(seen.begin(), seen.end(), cur) == seen.end();
        if (fresh && fork_points_of_return(cur).empty()) ++good;
        seen.push_back(cur);
    }
    return {"12 new non-forks", std::to_string(good) + " new non-forks"};
}

inline ClaimOutcome claim_forkless_abundant_acyclic(const Budget& b, Vertex n) {
    Rng rng(kSeedBase + 100 + static_cast<std::uint64_t>(n));
    const int trials = 4;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
        Q64 q = random_abundant_acyclic(rng, n);
        auto res = forkless_part(q, b);
        if (res.status != PartStatus::Finite || res.count != static_cast<std::size_t>(n))
            continue;
        // repeated source mutations traverse all members and close an n-cycle
        std::vector<Q64> cycle{q};
        Q64 cur = q;
        bool ok = true;
        for (Vertex s = 0; s < n && ok; ++s) {
            auto ord = acyclic_ordering(cur);
            cur = mutate(cur, ord.order.front());
            if (s + 1 < n && std::find(cycle.begin(), cycle.end(), cur) != cycle.end())
                ok = false;  // premature revisit: not an n-cycle
            cycle.push_back(cur);
        }
        if (!ok || !same_matrix(cycle.back(), q)) continue;
        cycle.pop_back();
        for (const auto& m : res.members)
            if (std::find(cycle.begin(), cycle.end(), m) == cycle.end()) ok = false;
        if (ok) ++good;
    }
    std::string want = std::to_string(trials) + " parts of size " + std::to_string(n) +
                       " forming a source n-cycle";
    std::string got = std::to_string(good) + " parts of size " + std::to_string(n) +
                      " forming a source n-cycle";
    return {want, good == trials ? want : got};
}

inline ClaimOutcome claim_key_count(const Budget& b, Vertex n, int kk) {
    Rng rng(kSeedBase + 200 + static_cast<std::uint64_t>(n) * 10 +
            static_cast<std::uint64_t>(kk));
    auto key = random_key(rng, n, kk);
    auto res = preforkless_part(key.quiver, b);
    std::ostringstream want;
    std::size_t total = kk == 0 ? 4 * (n - 2) : 10 * (n - 2);
    if (kk == 0)
        want << "finite:" << total << " acyclic=2 key=" << n - 1 << " other=0 tip=" << n - 3
             << " wing=" << 2 * n - 6;
    else
        want << "finite:" << total << " acyclic=2 key=" << 2 * n - 2 << " other=4 tip="
             << 4 * n - 12 << " wing=" << 4 * n - 12;
    return {want.str(), census_summary(res)};
}

inline ClaimOutcome claim_k4_key(const Budget& b, bool with_arrow) {
    auto nq = with_arrow ? examples::k4_key_q1() : examples::k4_key_q0();
    auto res = preforkless_part(nq.quiver, b);
    return {with_arrow ? "finite:20" : "finite:8", part_summary(res)};
}

inline ClaimOutcome claim_preforkless_prefork(const Budget& b, bool first) {
    auto nq = first ? examples::prefork1() : examples::prefork2();
    auto res = preforkless_part(nq.quiver, b);
    return {"empty", part_summary(res)};
}

inline ClaimOutcome claim_preforkless_cycle2222(const Budget& b) {
    // regression value frozen from the brute-force oracle
    return {"finite:6 acyclic=0 key=0 other=2 tip=4 wing=0",
            census_summary(preforkless_part(examples::cycle2222().quiver, b))};
}

inline ClaimOutcome claim_forkless_cycle2222_budget(const Budget& b) {
    Budget small = b;
    small.max_nodes = std::min<std::size_t>(b.max_nodes, 20000);
    return {"budget-exceeded", part_summary(forkless_part(examples::cycle2222().quiver, small))};
}

// --- mutation transition laws ------------------------------------------------------

inline ClaimOutcome claim_transition_a(const Budget&) {
    // fork or abundant acyclic, v not return/sink/source => fork with return
    // v and strictly more arrows
    Rng rng(kSeedBase + 301);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        bool from_fork = total % 2 == 0;
        Q64 q = from_fork ? random_fork(rng, n).quiver : random_abundant_acyclic(rng, n);
        VertexList returns = fork_points_of_return(q);
        VertexList cands;
        for (Vertex v = 0; v < n; ++v)
            if (std::find(returns.begin(), returns.end(), v) == returns.end() &&
                !is_sink(q, v) && !is_source(q, v))
                cands.push_back(v);
        if (cands.empty()) continue;
        Vertex v = cands[rng() % cands.size()];
        ++total;
        Q64 m = mutate(q, v);
        VertexList mret = fork_points_of_return(m);
        if (std::find(mret.begin(), mret.end(), v) != mret.end() &&
            arrow_count(m) > arrow_count(q))
            ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_b(const Budget&) {
    // pre-fork, m outside the triple => pre-fork with triple (m,{k,k'}),
    // more arrows, k-k' multiplicity preserved
    Rng rng(kSeedBase + 302);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 5 + static_cast<Vertex>(rng() % 2);
        auto pf = random_prefork(rng, n, total % 2);
        VertexList cands;
        for (Vertex v = 0; v < n; ++v)
            if (v != pf.r && v != pf.k && v != pf.kp) cands.push_back(v);
        if (cands.empty()) continue;
        Vertex m = cands[rng() % cands.size()];
        ++total;
        Q64 q = mutate(pf.quiver, m);
        auto triples = prefork_triples(q);
        PreforkTriple want{m, std::min(pf.k, pf.kp), std::max(pf.k, pf.kp)};
        if (std::find(triples.begin(), triples.end(), want) != triples.end() &&
            arrow_count(q) > arrow_count(pf.quiver) &&
            q.matrix()(pf.k, pf.kp) == pf.quiver.matrix()(pf.k, pf.kp))
            ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_c(const Budget&) {
    // pre-fork mutated at k: the five-bullet law
    Rng rng(kSeedBase + 303);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto pf = random_prefork(rng, n, total % 2);
        ++total;
        Q64 q = mutate(pf.quiver, pf.k);
        bool ok = arrow_count(q) > arrow_count(pf.quiver);
        auto no_kp = full_subquiver(q, detail::all_but(n, pf.kp));
        VertexList rets = fork_points_of_return(no_kp.quiver);
        Vertex k_local = static_cast<Vertex>(
            std::find(no_kp.index_map.begin(), no_kp.index_map.end(), pf.k) -
            no_kp.index_map.begin());
        ok = ok && std::find(rets.begin(), rets.end(), k_local) != rets.end();
        auto no_k = full_subquiver(q, detail::all_but(n, pf.k));
        ok = ok && is_abundant(no_k.quiver) && is_acyclic(no_k.quiver);
        ok = ok && static_cast<Vertex>(q_set(q, pf.k, pf.kp).size()) == n - 2;
        for (Vertex h = 0; h < n && ok; ++h) {
            if (h == pf.k || h == pf.kp) continue;
            VertexList fr = fork_points_of_return(mutate(q, h));
            ok = std::find(fr.begin(), fr.end(), h) != fr.end();
        }
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_d(const Budget&) {
    // key mutated at r outside {k,k'}: pre-fork when r is interior, key with
    // equal arrow count when r is a sink/source
    Rng rng(kSeedBase + 304);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto key = random_key(rng, n, total % 2);
        VertexList cands;
        for (Vertex v = 0; v < n; ++v)
            if (v != key.k && v != key.kp) cands.push_back(v);
        Vertex r = cands[rng() % cands.size()];
        ++total;
        Q64 p = mutate(key.quiver, r);
        KeyPair pair{std::min(key.k, key.kp), std::max(key.k, key.kp)};
        bool ok;
        if (is_sink(key.quiver, r) || is_source(key.quiver, r)) {
            auto kp2 = key_pairs(p);
            ok = std::find(kp2.begin(), kp2.end(), pair) != kp2.end() &&
                 arrow_count(p) == arrow_count(key.quiver) &&
                 p.matrix()(key.k, key.kp) == key.quiver.matrix()(key.k, key.kp);
        } else {
            auto triples = prefork_triples(p);
            ok = std::find(triples.begin(), triples.end(),
                           PreforkTriple{r, pair.first, pair.second}) != triples.end() &&
                 arrow_count(p) > arrow_count(key.quiver) &&
                 p.matrix()(key.k, key.kp) == key.quiver.matrix()(key.k, key.kp);
        }
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_e(const Budget&) {
    // key with k a sink or source: the four-bullet law
    Rng rng(kSeedBase + 305);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto key = random_key(rng, n, total % 2);
        Vertex k = -1, other = -1;
        for (Vertex cand : {key.k, key.kp}) {
            if (is_sink(key.quiver, cand) || is_source(key.quiver, cand)) {
                k = cand;
                other = cand == key.k ? key.kp : key.k;
                break;
            }
        }
        if (k < 0) continue;
        ++total;
        const Q64& q = key.quiver;
        Q64 r = mutate(q, k);
        bool ok = is_acyclic(r) &&
                  static_cast<Vertex>(q_set(r, k, other).size()) == n - 2;
        for (Vertex v = 0; v < n && ok; ++v) {
            if (v == k || v == other) continue;
            VertexList fr = fork_points_of_return(mutate(r, v));
            ok = std::find(fr.begin(), fr.end(), v) != fr.end();
        }
        // mu_[k,k'] is again a key, pair multiplicity preserved, and arrows
        // between the pair and the rest only flipped
        Q64 p = mutate(r, other);
        KeyPair pair{std::min(k, other), std::max(k, other)};
        auto kps = key_pairs(p);
        ok = ok && std::find(kps.begin(), kps.end(), pair) != kps.end() &&
             p.matrix()(k, other) == q.matrix()(k, other);
        for (Vertex i = 0; i < n && ok; ++i) {
            if (i == k || i == other) continue;
            ok = p.matrix()(i, k) == -q.matrix()(i, k) &&
                 p.matrix()(i, other) == -q.matrix()(i, other);
            for (Vertex j = 0; j < n && ok; ++j) {
                if (j == k || j == other || j == i) continue;
                ok = p.matrix()(i, j) == q.matrix()(i, j);
            }
        }
        if (!ok) continue;
        // when k' is interior: mu_k' and mu_[k',k] are non-acyclic with the
        // same fork-producing behavior
        if (!is_sink(q, other) && !is_source(q, other)) {
            Q64 rp = mutate(q, other);
            ok = !is_acyclic(rp) &&
                 static_cast<Vertex>(q_set(rp, k, other).size()) == n - 2;
            for (Vertex v = 0; v < n && ok; ++v) {
                if (v == k || v == other) continue;
                VertexList fr = fork_points_of_return(mutate(rp, v));
                ok = std::find(fr.begin(), fr.end(), v) != fr.end();
            }
            Q64 pp = mutate(rp, k);
            ok = ok && !is_acyclic(pp) &&
                 static_cast<Vertex>(q_set(pp, k, other).size()) == n - 2;
            for (Vertex v = 0; v < n && ok; ++v) {
                if (v == k || v == other) continue;
                VertexList fr = fork_points_of_return(mutate(pp, v));
                ok = std::find(fr.begin(), fr.end(), v) != fr.end();
            }
        }
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_f(const Budget&) {
    // wing: mu_r is a fork with return r; mu_k' is a tip with more arrows
    Rng rng(kSeedBase + 306);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto wing = random_wing(rng, n, total % 2);
        ++total;
        auto ws = wing_witnesses(wing.quiver);
        bool ok = std::find(ws.begin(), ws.end(), WingWitness{wing.k, wing.kp}) != ws.end();
        for (Vertex r = 0; r < n && ok; ++r) {
            if (r == wing.k || r == wing.kp) continue;
            VertexList fr = fork_points_of_return(mutate(wing.quiver, r));
            ok = std::find(fr.begin(), fr.end(), r) != fr.end();
        }
        Q64 t = mutate(wing.quiver, wing.kp);
        auto ts = tip_witnesses(t);
        ok = ok && std::find(ts.begin(), ts.end(), TipWitness{wing.kp, wing.k}) != ts.end() &&
             arrow_count(t) > arrow_count(wing.quiver);
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_transition_g(const Budget&) {
    // tip mutated off {k,k'}: a fork with return r when the pair is joined
    // and r lies on a 2-path between them, otherwise a pre-fork with triple
    // (r,{k,k'}); arrows strictly increase either way
    Rng rng(kSeedBase + 307);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto tip = random_tip(rng, n, total % 2);
        ++total;
        const Q64& t = tip.quiver;
        auto ts = tip_witnesses(t);
        bool ok = std::find(ts.begin(), ts.end(), TipWitness{tip.kp, tip.k}) != ts.end();
        const std::int64_t tkk = t.matrix()(tip.k, tip.kp);
        VertexList qs = q_set(t, tip.k, tip.kp);
        for (Vertex r = 0; r < n && ok; ++r) {
            if (r == tip.k || r == tip.kp) continue;
            Q64 f = mutate(t, r);
            bool in_qs = std::find(qs.begin(), qs.end(), r) != qs.end();
            if (tkk != 0 && in_qs) {
                VertexList fr = fork_points_of_return(f);
                ok = std::find(fr.begin(), fr.end(), r) != fr.end();
            } else {
                auto triples = prefork_triples(f);
                ok = std::find(triples.begin(), triples.end(),
                               PreforkTriple{r, std::min(tip.k, tip.kp),
                                             std::max(tip.k, tip.kp)}) != triples.end();
            }
            ok = ok && arrow_count(f) > arrow_count(t);
        }
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_fork_subquiver_closure(const Budget&) {
    // subquivers of a fork avoiding the return: abundant acyclic or a fork
    // with the same return
    Rng rng(kSeedBase + 308);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto fork = random_fork(rng, n);
        std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
        VertexList keep;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) keep.push_back(v);
        if (keep.size() < 2) continue;
        ++total;
        auto sub = full_subquiver(fork.quiver, keep);
        bool aa = is_abundant(sub.quiver) && is_acyclic(sub.quiver);
        VertexList rets_orig;
        for (Vertex r : fork_points_of_return(sub.quiver))
            rets_orig.push_back(sub.index_map[r]);
        bool fork_same_r = std::find(rets_orig.begin(), rets_orig.end(),
                                     fork.point_of_return) != rets_orig.end();
        if (aa || fork_same_r) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_prefork_subquiver_closure(const Budget&) {
    // every full subquiver of a pre-fork is abundant acyclic, a key with the
    // pair, a fork with the return, or a pre-fork with the triple
    Rng rng(kSeedBase + 309);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 5 + static_cast<Vertex>(rng() % 2);
        auto pf = random_prefork(rng, n, total % 2);
        std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
        VertexList keep;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) keep.push_back(v);
        if (keep.size() < 2) continue;
        ++total;
        auto sub = full_subquiver(pf.quiver, keep);
        const Q64& s = sub.quiver;
        auto orig = [&](Vertex local) { return sub.index_map[local]; };
        bool ok = false;
        if (is_abundant(s) && is_acyclic(s)) ok = true;
        if (!ok && s.vertex_count() == 2) {
            // the {k,k'} pair itself: both one-vertex deletions are vacuously
            // abundant acyclic, so it is a key with the pair
            ok = orig(0) == std::min(pf.k, pf.kp) && orig(1) == std::max(pf.k, pf.kp);
        }
        if (!ok && s.vertex_count() >= 3) {
            for (const auto& [a, b] : key_pairs(s))
                if ((orig(a) == pf.k && orig(b) == pf.kp) ||
                    (orig(a) == pf.kp && orig(b) == pf.k))
                    ok = true;
        }
        if (!ok)
            for (Vertex r : fork_points_of_return(s))
                if (orig(r) == pf.r) ok = true;
        if (!ok && s.vertex_count() >= 4)
            for (const auto& t : prefork_triples(s))
                if (orig(t.r) == pf.r &&
                    ((orig(t.k) == pf.k && orig(t.kp) == pf.kp) ||
                     (orig(t.k) == pf.kp && orig(t.kp) == pf.k)))
                    ok = true;
        if (ok) ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline ClaimOutcome claim_prefork_translate(const Budget&) {
    // |q_kk'| = 1: the translate mu_[k,k',k,k',k](Q) equals Q under the
    // k <-> k' swap
    Rng rng(kSeedBase + 310);
    int total = 0, good = 0;
    while (total < kPropertyCases) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        auto pf = random_prefork(rng, n, 1);
        ++total;
        Q64 translate = mutate_seq(pf.quiver, {pf.k, pf.kp, pf.k, pf.kp, pf.k});
        if (equal_under_permutation(translate, pf.quiver,
                                    transposition(n, pf.k, pf.kp)))
            ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

// --- mutation finiteness -----------------------------------------------------------

inline ClaimOutcome claim_finiteness_finite(const Budget& b, const NQ64& nq,
                                            std::uint64_t size) {
    auto res = mutation_finiteness(nq.quiver, b);
    std::ostringstream obs;
    obs << to_string(res.status);
    if (res.status == FinitenessStatus::Finite) obs << ':' << res.class_size;
    return {"finite:" + std::to_string(size), obs.str()};
}

inline ClaimOutcome claim_finiteness_infinite(const Budget& b) {
    int total = 0, good = 0;
    for (const auto& [name, nq] : builtin_examples()) {
        if (name == "single_arrow" || name == "empty_pair" || name == "a3_path" ||
            name == "two_arrow_components")
            continue;  // the mutation-finite fixtures
        ++total;
        auto res = mutation_finiteness(nq.quiver, b);
        if (res.status != FinitenessStatus::Infinite || !res.fork_witness) continue;
        // the witness must be a fork reached by the reported sequence
        if (fork_points_of_return(*res.fork_witness).empty()) continue;
        if (res.witness_component.empty()) {
            if (!same_matrix(mutate_seq(nq.quiver, res.sequence), *res.fork_witness)) continue;
        } else {
            Q64 reached = mutate_seq(nq.quiver, res.sequence);
            if (!same_matrix(full_subquiver(reached, res.witness_component).quiver,
                             *res.fork_witness))
                continue;
        }
        ++good;
    }
    return {cases_summary(total, total), cases_summary(good, total)};
}

}  // namespace verify_detail

inline std::vector<Claim> builtin_claims() {
    using namespace verify_detail;
    std::vector<Claim> claims;
    auto add = [&](std::string id, Provenance p, std::function<ClaimOutcome(const Budget&)> f) {
        claims.push_back({std::move(id), p, std::move(f)});
    };

    add("mutation_involution", Provenance::Theory, claim_involution);
    add("mutation_preserves_invariants", Provenance::Theory, claim_invariants_preserved);
    add("no_arrow_four_cycle_identity", Provenance::Theory, claim_no_arrow_identity);
    add("single_arrow_swap_identity", Provenance::Theory, claim_single_arrow_swap);
    add("sink_source_mutation_flips_only", Provenance::Theory, claim_sink_source_mutation);
    add("mutate_cycle345_at_j", Provenance::Derived, claim_mutate_cycle345);
    add("classify_fork_def", Provenance::Theory, claim_classify_fork_def);
    add("classify_prefork_examples", Provenance::Theory, claim_classify_preforks);
    add("key_ordering_uniqueness", Provenance::Theory, claim_key_orderings);
    add("abundant_acyclic_unique_ordering", Provenance::Theory,
        claim_abundant_acyclic_ordering);

    add("forkless_cycle345", Provenance::Theory, claim_forkless_cycle345);
    add("forkless_fork_def", Provenance::Derived, claim_forkless_fork_def);
    add("forkless_14", Provenance::Theory, claim_forkless_14);
    add("forkless_two_nonfork", Provenance::Theory, claim_forkless_two_nonfork);
    add("escape_forkless14_sub_ijk", Provenance::Derived, claim_escape_14_sub_ijk);
    add("forkless_path222_budget", Provenance::Theory, claim_forkless_path222_budget);
    add("path222_alternating_nonforks", Provenance::Theory, claim_path222_alternating);
    for (Vertex n = 3; n <= 8; ++n)
        add("forkless_abundant_acyclic_n" + std::to_string(n), Provenance::Theory,
            [n](const Budget& b) { return claim_forkless_abundant_acyclic(b, n); });

    for (Vertex n = 4; n <= 7; ++n) {
        add("preforkless_key_q0_n" + std::to_string(n), Provenance::Theory,
            [n](const Budget& b) { return claim_key_count(b, n, 0); });
        add("preforkless_key_q1_n" + std::to_string(n), Provenance::Theory,
            [n](const Budget& b) { return claim_key_count(b, n, 1); });
    }
    add("preforkless_k4_key_q0", Provenance::Theory,
        [](const Budget& b) { return claim_k4_key(b, false); });
    add("preforkless_k4_key_q1", Provenance::Theory,
        [](const Budget& b) { return claim_k4_key(b, true); });
    add("preforkless_prefork1", Provenance::Theory,
        [](const Budget& b) { return claim_preforkless_prefork(b, true); });
    add("preforkless_prefork2", Provenance::Theory,
        [](const Budget& b) { return claim_preforkless_prefork(b, false); });
    add("preforkless_cycle2222", Provenance::Derived, claim_preforkless_cycle2222);
    add("forkless_cycle2222_budget", Provenance::Theory, claim_forkless_cycle2222_budget);

    add("transition_a_fork_mutation", Provenance::Theory, claim_transition_a);
    add("transition_b_prefork_mutation", Provenance::Theory, claim_transition_b);
    add("transition_c_prefork_mutation_at_k", Provenance::Theory, claim_transition_c);
    add("transition_d_key_mutation", Provenance::Theory, claim_transition_d);
    add("transition_e_key_sink_source", Provenance::Theory, claim_transition_e);
    add("transition_f_wing_mutation", Provenance::Theory, claim_transition_f);
    add("transition_g_tip_mutation", Provenance::Theory, claim_transition_g);
    add("fork_subquiver_closure", Provenance::Theory, claim_fork_subquiver_closure);
    add("prefork_subquiver_closure", Provenance::Theory, claim_prefork_subquiver_closure);
    add("prefork_translate_isomorphism", Provenance::Theory, claim_prefork_translate);

    add("finiteness_single_arrow", Provenance::Trivial, [](const Budget& b) {
        return claim_finiteness_finite(b, examples::single_arrow(), 2);
    });
    add("finiteness_empty_pair", Provenance::Trivial, [](const Budget& b) {
        return claim_finiteness_finite(b, examples::empty_pair(), 1);
    });
    add("finiteness_a3_path", Provenance::Derived, [](const Budget& b) {
        return claim_finiteness_finite(b, examples::a3_path(), 14);
    });
    add("finiteness_two_components", Provenance::Derived, [](const Budget& b) {
        return claim_finiteness_finite(b, examples::two_arrow_components(), 4);
    });
    add("finiteness_infinite_examples", Provenance::Theory, claim_finiteness_infinite);

    add("hereditary_forkless_14", Provenance::Theory, [](const Budget& b) {
        auto results = check_hereditary_bound(examples::forkless14().quiver, b,
                                              PartMode::Forkless);
        int good = 0, total = 0;
        for (const auto& r : results) {
            ++total;
            if (r.status == ClaimStatus::Pass) ++good;
        }
        return ClaimOutcome{cases_summary(total, total), cases_summary(good, total)};
    });
    add("hereditary_keys_preforkless", Provenance::Theory, [](const Budget& b) {
        int good = 0, total = 0;
        for (Vertex n = 4; n <= 7; ++n)
            for (int kk : {0, 1}) {
                Rng rng(kSeedBase + 200 + static_cast<std::uint64_t>(n) * 10 +
                        static_cast<std::uint64_t>(kk));
                auto key = random_key(rng, n, kk);
                auto results = check_hereditary_bound(key.quiver, b, PartMode::Preforkless);
                for (const auto& r : results) {
                    ++total;
                    if (r.status == ClaimStatus::Pass) ++good;
                }
            }
        return ClaimOutcome{cases_summary(total, total), cases_summary(good, total)};
    });

    return claims;
}

}  // namespace forkless
