#include "forkless/quiver.hpp"
#include "forkless/generate.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace forkless;
using Q = Quiver<std::int64_t>;

namespace {

Q make(Vertex n, std::vector<Arrow<std::int64_t>> arrows) {
    return Q::from_arrows(n, arrows);
}

// independent check: enumerate all topological orders by brute force
std::vector<VertexList> all_topological_orders(const Q& q) {
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
}

}  // namespace

TEST_CASE("construction and invariants") {
    Q q = make(2, {{0, 1, 1}});
    CHECK(q.mult(0, 1) == 1);
    CHECK(q.mult(1, 0) == -1);
    CHECK(q.mult(0, 0) == 0);

    CHECK_THROWS_AS(make(2, {{0, 0, 1}}), loop_arrow);
    CHECK_THROWS_AS(make(2, {{0, 1, 1}, {1, 0, 2}}), conflicting_pair);
    CHECK_THROWS_AS(make(2, {{0, 1, 1}, {0, 1, 2}}), conflicting_pair);
    CHECK_THROWS_AS(make(2, {{0, 2, 1}}), index_out_of_range);

    // a non-skew matrix is rejected
    Q::Matrix bad = Q::Matrix::Zero(2, 2);
    bad(0, 1) = 3;
    CHECK_THROWS_AS((void)Q(bad), quiver_error);
}

TEST_CASE("mutation matches the arrow-level procedure") {
    // flip at a source changes nothing else
    Q q = make(2, {{0, 1, 1}});
    Q m = mutate(q, 0);
    CHECK(m.mult(1, 0) == 1);

    // (3,4,5)-cycle at the middle vertex: composite adds 12 arrows against 5
    Q cyc = make(3, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}});
    Q got = mutate(cyc, 1);
    CHECK(got == make(3, {{1, 0, 3}, {2, 1, 4}, {0, 2, 7}}));

    CHECK_THROWS_AS(mutate(q, 7), index_out_of_range);
}

TEST_CASE("mutation is an involution and preserves invariants") {
    Rng rng(11);
    for (int c = 0; c < 200; ++c) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 5);
        Q q = random_quiver(rng, n);
        Vertex v = static_cast<Vertex>(rng() % n);
        Q m = mutate(q, v);
        CHECK(mutate(m, v) == q);
        for (Vertex i = 0; i < n; ++i) {
            CHECK(m.matrix()(i, i) == 0);
            for (Vertex j = 0; j < n; ++j) CHECK(m.matrix()(i, j) == -m.matrix()(j, i));
        }
    }
}

TEST_CASE("checked arithmetic rejects overflow") {
    const std::int64_t big = std::int64_t{1} << 32;
    Q q = make(3, {{0, 1, big}, {1, 2, big}, {2, 0, 2}});
    CHECK_THROWS_AS(mutate(q, 1), multiplicity_overflow);  // big*big overflows
}

TEST_CASE("sequence reduction") {
    CHECK(reduce_sequence({1, 2, 2, 3}) == MutationSeq{1, 3});
    CHECK(reduce_sequence({1, 2, 2, 1}) == MutationSeq{});
    CHECK(reduce_sequence({1, 2, 1, 2}) == MutationSeq{1, 2, 1, 2});
}

TEST_CASE("mutate_seq folds left-to-right after reduction") {
    Q q = make(3, {{0, 1, 2}, {1, 2, 3}});
    CHECK(mutate_seq(q, {}) == q);
    CHECK(mutate_seq(q, {1, 1}) == q);
    CHECK(mutate_seq(q, {0, 1}) == mutate(mutate(q, 0), 1));
    // no arrow between 0 and 2: the 4-step cycle is the identity
    CHECK(mutate_seq(q, {0, 2, 0, 2}) == q);
}

TEST_CASE("swap identity for a single arrow") {
    Rng rng(12);
    for (int c = 0; c < 60; ++c) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 4);
        Q q = random_quiver(rng, n, 3, 0.8);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j) {
                if (i == j || std::abs(q.matrix()(i, j)) != 1) continue;
                Q a = mutate_seq(q, {i, j, i, j, i});
                CHECK(a == mutate_seq(q, {j, i, j, i, j}));
                CHECK(equal_under_permutation(a, q, transposition(n, i, j)));
            }
    }
}

TEST_CASE("arrow_count") {
    CHECK(arrow_count(Q::empty(3)) == 0);
    Q fork = make(3, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}});
    CHECK(arrow_count(fork) == 12);
}

TEST_CASE("neighborhoods and q_set") {
    Q fork = make(3, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}});  // i->r, r->j, j->i
    auto nb = neighborhoods(fork, 1);
    CHECK(nb.inward == VertexList{0});
    CHECK(nb.outward == VertexList{2});
    auto nb_iso = neighborhoods(Q::empty(2), 0);
    CHECK(nb_iso.inward.empty());
    CHECK(nb_iso.outward.empty());
    // a source sees everything on the outward side
    Q star = make(3, {{0, 1, 2}, {0, 2, 3}});
    auto nb_src = neighborhoods(star, 0);
    CHECK(nb_src.inward.empty());
    CHECK(nb_src.outward == VertexList{1, 2});

    // 3-vertex path k -> a -> k'
    Q path = make(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(q_set(path, 0, 2) == VertexList{1});
    CHECK(q_set(path, 2, 0) == VertexList{1});
    CHECK_THROWS_AS(q_set(path, 1, 1), equal_vertices);
}

TEST_CASE("full subquiver keeps original order and returns the index map") {
    Q q = make(4, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}, {0, 3, 2}});
    auto sub = full_subquiver(q, {3, 0, 2});
    CHECK(sub.index_map == VertexList{0, 2, 3});
    CHECK(sub.quiver.mult(1, 0) == 5);  // 2 -> 0 with 5 arrows
    CHECK(sub.quiver.mult(0, 2) == 2);

    auto all = full_subquiver(q, {0, 1, 2, 3});
    CHECK(all.quiver == q);
    CHECK_THROWS_AS(full_subquiver(q, {}), empty_vertex_set);
}

TEST_CASE("five-vertex example loses connectivity without its hub") {
    Q q = make(5, {{4, 1, 2}, {1, 3, 2}, {1, 2, 3}, {3, 2, 3}, {0, 1, 2}, {0, 3, 2}, {2, 0, 2}});
    CHECK(is_connected(q));
    auto sub = full_subquiver(q, {0, 2, 3, 4});
    CHECK_FALSE(is_connected(sub.quiver));
    CHECK(connected_components(sub.quiver).size() == 2);
    CHECK(is_connected(Q::empty(1)));
}

TEST_CASE("acyclicity") {
    Q cyc = make(3, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}});
    CHECK_FALSE(is_acyclic(cyc));
    CHECK(is_acyclic(Q::empty(3)));
    CHECK(is_acyclic(make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})));
}

TEST_CASE("acyclic ordering agrees with brute-force enumeration") {
    Rng rng(13);
    for (int c = 0; c < 120; ++c) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 4);
        Q q = random_quiver(rng, n, 3, 0.6);
        auto orders = all_topological_orders(q);
        if (orders.empty()) {
            CHECK_THROWS_AS(acyclic_ordering(q), cyclic_error);
            CHECK_FALSE(is_acyclic(q));
        } else {
            auto got = acyclic_ordering(q);
            CHECK(std::find(orders.begin(), orders.end(), got.order) != orders.end());
            CHECK(got.unique == (orders.size() == 1));
        }
    }
}

TEST_CASE("abundant acyclic quivers have a unique ordering") {
    Rng rng(14);
    for (Vertex n = 2; n <= 6; ++n) {
        Q q = random_abundant_acyclic(rng, n);
        auto ord = acyclic_ordering(q);
        CHECK(ord.unique);
        CHECK(is_source(q, ord.order.front()));
        CHECK(is_sink(q, ord.order.back()));
    }
}

TEST_CASE("restriction commutes with mutation at kept vertices") {
    // mutation is local: the update of q_ij reads only q_ij, q_iv, q_vj, so
    // restricting to a vertex set containing v commutes with mu_v; hence
    // every quiver mutation-equivalent to a full subquiver is a full
    // subquiver of a quiver mutation-equivalent to the original
    Rng rng(15);
    for (int c = 0; c < 120; ++c) {
        Vertex n = 3 + static_cast<Vertex>(rng() % 4);
        Q q = random_quiver(rng, n);
        std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
        VertexList keep;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) keep.push_back(v);
        if (keep.size() < 2) continue;
        MutationSeq w, w_local;
        for (int s = 0; s < 6; ++s) {
            Vertex v = keep[rng() % keep.size()];
            w.push_back(v);
            w_local.push_back(static_cast<Vertex>(
                std::find(keep.begin(), keep.end(), v) - keep.begin()));
        }
        auto sub = full_subquiver(q, keep);
        CHECK(full_subquiver(mutate_seq(q, w), keep).quiver ==
              mutate_seq(sub.quiver, w_local));
    }
}

TEST_CASE("every member of a subquiver's class restricts from the full class") {
    // joint BFS on a finite-type instance: the labelled class of the {i,j}
    // edge of the single-arrow path embeds into restrictions of the path's
    // class
    Q path = Q::from_arrows(3, {{0, 1, 1}, {1, 2, 1}});
    auto sub = full_subquiver(path, {0, 1});

    auto enumerate = [](const Q& start) {
        std::vector<Q> nodes{start};
        for (std::size_t head = 0; head < nodes.size(); ++head)
            for (Vertex v = 0; v < start.vertex_count(); ++v) {
                Q b = mutate(nodes[head], v);
                if (std::find(nodes.begin(), nodes.end(), b) == nodes.end())
                    nodes.push_back(b);
            }
        return nodes;
    };
    auto full_class = enumerate(path);
    auto sub_class = enumerate(sub.quiver);
    CHECK(full_class.size() == 14);
    CHECK(sub_class.size() == 2);
    for (const auto& s : sub_class) {
        bool embeds = false;
        for (const auto& f : full_class)
            if (full_subquiver(f, {0, 1}).quiver == s) embeds = true;
        CHECK(embeds);
    }
}

TEST_CASE("equal_under_permutation validates its permutation") {
    Q q = make(2, {{0, 1, 1}});
    CHECK(equal_under_permutation(q, q, {0, 1}));
    CHECK_THROWS_AS(equal_under_permutation(q, q, {0, 0}), invalid_permutation);
    CHECK_THROWS_AS(equal_under_permutation(q, q, {0}), invalid_permutation);
    CHECK_THROWS_AS(equal_under_permutation(q, Q::empty(3), {0, 1}), invalid_permutation);
}
