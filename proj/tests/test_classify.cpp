#include "forkless/classify.hpp"
#include "forkless/generate.hpp"
#include "forkless/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace forkless;
using Q = Quiver<std::int64_t>;

TEST_CASE("abundance") {
    CHECK(is_abundant(examples::fork_def().quiver));
    CHECK_FALSE(is_abundant(Q::from_arrows(3, {{0, 1, 3}, {1, 2, 4}})));
    CHECK(is_abundant(Q::empty(1)));
}

TEST_CASE("fork points of return") {
    // the worked fork: return r, and only r
    CHECK(fork_points_of_return(examples::fork_def().quiver) == VertexList{1});
    // the (3,4,5)-cycle: dominance picks out the vertex between the 3 and 4 sides
    CHECK(fork_points_of_return(examples::cycle345().quiver) == VertexList{1});
    // acyclic quivers are never forks
    Rng rng(21);
    CHECK(fork_points_of_return(random_abundant_acyclic(rng, 5)).empty());
    // abundant non-acyclic without dominance: the sink-extended cycle
    CHECK(fork_points_of_return(examples::two_nonfork().quiver).empty());
}

TEST_CASE("key pairs") {
    CHECK_THROWS_AS(key_pairs(Q::empty(2)), too_few_vertices);
    auto kp0 = key_pairs(examples::k4_key_q0().quiver);
    CHECK(std::find(kp0.begin(), kp0.end(), KeyPair{0, 1}) != kp0.end());
    auto kp1 = key_pairs(examples::k4_key_q1().quiver);
    CHECK(std::find(kp1.begin(), kp1.end(), KeyPair{0, 1}) != kp1.end());

    // abundant acyclic: exactly the adjacent pairs of the unique ordering
    Rng rng(22);
    for (Vertex n = 3; n <= 6; ++n) {
        Q q = random_abundant_acyclic(rng, n);
        auto ord = acyclic_ordering(q).order;
        auto kps = key_pairs(q);
        CHECK(kps.size() == static_cast<std::size_t>(n - 1));
        for (Vertex i = 0; i + 1 < n; ++i) {
            KeyPair want{std::min(ord[i], ord[i + 1]), std::max(ord[i], ord[i + 1])};
            CHECK(std::find(kps.begin(), kps.end(), want) != kps.end());
        }
    }

    // deleting the return of a pre-fork leaves a key with the pair
    Rng rng2(23);
    for (int c = 0; c < 30; ++c) {
        auto pf = random_prefork(rng2, 5, c % 2);
        auto sub = full_subquiver(pf.quiver, detail::all_but(5, pf.r));
        auto local = [&](Vertex orig) {
            return static_cast<Vertex>(std::find(sub.index_map.begin(), sub.index_map.end(),
                                                 orig) -
                                       sub.index_map.begin());
        };
        KeyPair want{std::min(local(pf.k), local(pf.kp)), std::max(local(pf.k), local(pf.kp))};
        auto kps = key_pairs(sub.quiver);
        CHECK(std::find(kps.begin(), kps.end(), want) != kps.end());
    }
}

TEST_CASE("prefork triples of the worked examples") {
    auto t1 = prefork_triples(examples::prefork1().quiver);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0] == PreforkTriple{1, 2, 3});
    auto t2 = prefork_triples(examples::prefork2().quiver);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0] == PreforkTriple{1, 2, 3});
    CHECK_THROWS_AS(prefork_triples(examples::cycle345().quiver), too_few_vertices);
}

TEST_CASE("q_set of a mutated key covers everything") {
    Rng rng(24);
    for (int c = 0; c < 30; ++c) {
        auto key = random_key_internal_pair(rng, 5, c % 2);
        Q p = mutate(key.quiver, key.k);
        CHECK(q_set(p, key.k, key.kp).size() == 3);
        CHECK(q_set(key.quiver, key.k, key.kp).empty());
    }
}

TEST_CASE("fork minus its return is abundant acyclic") {
    auto sub = full_subquiver(examples::fork_def().quiver, {0, 2});  // drop r
    CHECK(is_abundant(sub.quiver));
    CHECK(is_acyclic(sub.quiver));
    CHECK(sub.quiver.mult(1, 0) == 5);  // j -> i survives
}

TEST_CASE("wing and tip witnesses from mutated keys and pre-forks") {
    Rng rng(25);
    for (int c = 0; c < 30; ++c) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 2);
        int kk = c % 2;
        auto key = random_key_internal_pair(rng, n, kk);
        Q w = mutate(key.quiver, key.k);
        auto ws = wing_witnesses(w);
        CHECK(std::find(ws.begin(), ws.end(), WingWitness{key.k, key.kp}) != ws.end());

        // mutating a pre-fork at k or k' also lands on a wing (k, k' are
        // never sinks or sources in a pre-fork)
        auto pf = random_prefork(rng, n, kk);
        auto pws = wing_witnesses(mutate(pf.quiver, pf.k));
        CHECK(std::find(pws.begin(), pws.end(), WingWitness{pf.k, pf.kp}) != pws.end());
        auto pws2 = wing_witnesses(mutate(pf.quiver, pf.kp));
        CHECK(std::find(pws2.begin(), pws2.end(), WingWitness{pf.kp, pf.k}) != pws2.end());

        Q t = mutate(w, key.kp);
        auto ts = tip_witnesses(t);
        CHECK(std::find(ts.begin(), ts.end(), TipWitness{key.kp, key.k}) != ts.end());

        // abundant quivers have no wing or tip witnesses
        Q aa = random_abundant_acyclic(rng, n);
        CHECK(wing_witnesses(aa).empty());
        CHECK(tip_witnesses(aa).empty());
    }
}

TEST_CASE("tip witnesses come in pairs when the pair is disconnected") {
    Rng rng(26);
    for (int c = 0; c < 20; ++c) {
        auto key = random_key_internal_pair(rng, 5, 0);
        Q t = mutate_seq(key.quiver, {key.k, key.kp});
        auto ts = tip_witnesses(t);
        CHECK(std::find(ts.begin(), ts.end(), TipWitness{key.kp, key.k}) != ts.end());
        CHECK(std::find(ts.begin(), ts.end(), TipWitness{key.k, key.kp}) != ts.end());
    }
}

TEST_CASE("key orderings: exactly the k/k' ambiguity") {
    Rng rng(30);
    auto all_orders = [](const Q& q) {
        const Vertex n = q.vertex_count();
        VertexList perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<VertexList> out;
        do {
            bool ok = true;
            for (Vertex a = 0; a < n && ok; ++a)
                for (Vertex b = a + 1; b < n && ok; ++b)
                    if (q.matrix()(perm[b], perm[a]) > 0) ok = false;
            if (ok) out.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };
    for (int c = 0; c < 40; ++c) {
        Vertex n = 3 + static_cast<Vertex>(rng() % 3);
        int kk = c % 2;
        auto key = random_key(rng, n, kk);
        auto orders = all_orders(key.quiver);
        auto ord = acyclic_ordering(key.quiver);
        if (kk == 0) {
            REQUIRE(orders.size() == 2);  // the two orders swap adjacent k, k'
            CHECK_FALSE(ord.unique);
            VertexList swapped = orders[0];
            for (auto& v : swapped) {
                if (v == key.k)
                    v = key.kp;
                else if (v == key.kp)
                    v = key.k;
            }
            CHECK(swapped == orders[1]);
        } else {
            CHECK(orders.size() == 1);
            CHECK(ord.unique);
        }
    }
}

TEST_CASE("classification report invariants") {
    Rng rng(27);
    auto check_report = [](const Q& q) {
        auto r = classify(q);
        if (r.is_fork()) {
            CHECK(r.abundant);
            CHECK_FALSE(r.acyclic);
        }
        if (r.is_key()) CHECK(r.acyclic);
        for (const auto& w : r.wing_witnesses)
            CHECK(std::abs(q.matrix()(w.k, w.kp)) < 2);
        for (const auto& t : r.tip_witnesses)
            CHECK(std::abs(q.matrix()(t.k, t.kp)) < 2);
    };
    for (int c = 0; c < 60; ++c) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        check_report(random_quiver(rng, n));
    }
    for (int c = 0; c < 20; ++c) {
        check_report(random_fork(rng, 5).quiver);
        check_report(random_prefork(rng, 5, c % 2).quiver);
        check_report(random_wing(rng, 5, c % 2).quiver);
        check_report(random_tip(rng, 5, c % 2).quiver);
    }
}

TEST_CASE("a pre-fork with an abundant pair is a fork; a key with one is abundant acyclic") {
    Rng rng(28);
    for (int c = 0; c < 30; ++c) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 3);
        // an abundant acyclic quiver is a key for every adjacent ordering pair;
        // mutating at an interior vertex gives a quiver that is simultaneously
        // a pre-fork (for such a pair) and a fork
        Q q = random_abundant_acyclic(rng, n);
        auto ord = acyclic_ordering(q).order;
        VertexList interior(ord.begin() + 1, ord.end() - 1);
        if (interior.empty()) continue;
        Vertex r = interior[rng() % interior.size()];
        Q m = mutate(q, r);
        auto rep = classify(m);
        CHECK(rep.is_fork());
        CHECK(std::find(rep.fork_returns.begin(), rep.fork_returns.end(), r) !=
              rep.fork_returns.end());
        bool has_triple_at_r = false;
        for (const auto& t : rep.prefork_triples) has_triple_at_r |= t.r == r;
        CHECK(has_triple_at_r);
    }
}

TEST_CASE("classify on small quivers yields empty witness sets") {
    auto r = classify(Q::from_arrows(2, {{0, 1, 1}}));
    CHECK(r.acyclic);
    CHECK(r.plain());
    CHECK(r.key_pairs.empty());
    CHECK(r.prefork_triples.empty());
    auto e = classify(Q::empty(2));
    CHECK(e.acyclic);
    CHECK_FALSE(e.abundant);
    CHECK(e.plain());
}

TEST_CASE("dominant class ordering") {
    CHECK(classify(examples::fork_def().quiver).dominant_class() == QuiverClass::Fork);
    CHECK(classify(examples::prefork1().quiver).dominant_class() == QuiverClass::Prefork);
    CHECK(classify(examples::k4_key_q0().quiver).dominant_class() == QuiverClass::Key);
    CHECK(classify(examples::cycle2222().quiver).dominant_class() == QuiverClass::Other);
    Rng rng(29);
    CHECK(classify(random_abundant_acyclic(rng, 4)).dominant_class() ==
          QuiverClass::AbundantAcyclic);
}
