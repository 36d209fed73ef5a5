#pragma once

// One-command reproduction of the engine's checkable claims: the worked
// example quivers, exact part counts, the key-count formulas, mutation
// transition laws, and the hereditary bounds. Every claim carries a
// provenance tag:
//   theory  - value stated by the underlying fork/pre-fork theory
//   trivial - direct consequence of the definitions
//   derived - computed once by the brute-force oracle and frozen
// Claims run through the public operations of the other modules only.

#include "forkless/classify.hpp"
#include "forkless/explore.hpp"
#include "forkless/generate.hpp"
#include "forkless/io.hpp"
#include "forkless/quiver.hpp"

#include <chrono>
#include <map>
#include <sstream>

namespace forkless {

enum class Provenance { Theory, Trivial, Derived };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Theory: return "theory";
        case Provenance::Trivial: return "trivial";
        case Provenance::Derived: return "derived";
    }
    return "?";
}

enum class ClaimStatus { Pass, Fail, Skipped };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::Skipped: return "skipped";
    }
    return "?";
}

struct ClaimResult {
    std::string id;
    Provenance provenance = Provenance::Trivial;
    ClaimStatus status = ClaimStatus::Fail;
    std::string expected;
    std::string observed;
    std::string note;  // e.g. the generator seed backing the claim
    double ms = 0.0;
};

struct ClaimOutcome {
    std::string expected;
    std::string observed;
    std::string note;
    bool skipped = false;
};

struct Claim {
    std::string id;
    Provenance provenance;
    std::function<ClaimOutcome(const Budget&)> run;
};

// ---- builtin example quivers ---------------------------------------------------

using Q64 = Quiver<std::int64_t>;
using NQ64 = NamedQuiver<std::int64_t>;

namespace examples {

inline NQ64 make(Vertex n, std::vector<std::string> names,
                 std::vector<Arrow<std::int64_t>> arrows) {
    return {Q64::from_arrows(n, arrows), std::move(names)};
}

inline NQ64 fork_def() { return make(3, {"i", "r", "j"}, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}}); }
inline NQ64 cycle345() { return make(3, {"i", "j", "k"}, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}}); }
inline NQ64 forkless14() {
    return make(4, {"i", "j", "k", "l"},
                {{2, 1, 10}, {0, 2, 1366}, {1, 0, 138}, {1, 3, 2}, {2, 3, 2}, {0, 3, 2}});
}
inline NQ64 two_nonfork() {
    return make(4, {"i", "j", "k", "l"},
                {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}, {0, 3, 2}, {1, 3, 2}, {2, 3, 2}});
}
inline NQ64 path222() {
    return make(4, {"i", "j", "k", "l"}, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}});
}
inline NQ64 five_vertex() {
    return make(5, {"i", "j", "k", "l", "m"},
                {{4, 1, 2}, {1, 3, 2}, {1, 2, 3}, {3, 2, 3}, {0, 1, 2}, {0, 3, 2}, {2, 0, 2}});
}
inline NQ64 prefork1() {
    return make(4, {"j", "l", "k", "kp"},
                {{2, 0, 5}, {3, 0, 5}, {0, 1, 3}, {1, 2, 4}, {1, 3, 4}, {3, 2, 1}});
}
inline NQ64 prefork2() {
    return make(4, {"j", "l", "k", "kp"},
                {{2, 0, 5}, {3, 0, 5}, {0, 1, 3}, {1, 2, 4}, {1, 3, 4}});
}
inline NQ64 cycle2222() {
    return make(4, {"i", "j", "k", "l"}, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}});
}
inline NQ64 k4_key_q0() {
    return make(4, {"k", "kp", "a", "b"},
                {{0, 2, 2}, {1, 2, 2}, {0, 3, 2}, {1, 3, 2}, {2, 3, 2}});
}
inline NQ64 k4_key_q1() {
    return make(4, {"k", "kp", "a", "b"},
                {{0, 2, 2}, {1, 2, 2}, {0, 3, 2}, {1, 3, 2}, {2, 3, 2}, {0, 1, 1}});
}
inline NQ64 single_arrow() { return make(2, {"i", "j"}, {{0, 1, 1}}); }
inline NQ64 empty_pair() { return make(2, {"i", "j"}, {}); }
inline NQ64 a3_path() { return make(3, {"i", "j", "k"}, {{0, 1, 1}, {1, 2, 1}}); }
inline NQ64 two_arrow_components() {
    return make(4, {"i", "j", "k", "l"}, {{0, 1, 1}, {2, 3, 1}});
}

}  // namespace examples

// Exactly the quivers displayed in the worked examples, plus the fixtures
// used by the formula claims.
inline std::vector<std::pair<std::string, NQ64>> builtin_examples() {
    return {
        {"fork_def", examples::fork_def()},
        {"cycle345", examples::cycle345()},
        {"forkless14", examples::forkless14()},
        {"two_nonfork", examples::two_nonfork()},
        {"path222", examples::path222()},
        {"five_vertex", examples::five_vertex()},
        {"prefork1", examples::prefork1()},
        {"prefork2", examples::prefork2()},
        {"cycle2222", examples::cycle2222()},
        {"k4_key_q0", examples::k4_key_q0()},
        {"k4_key_q1", examples::k4_key_q1()},
        {"single_arrow", examples::single_arrow()},
        {"empty_pair", examples::empty_pair()},
        {"a3_path", examples::a3_path()},
        {"two_arrow_components", examples::two_arrow_components()},
    };
}

namespace verify_detail {

constexpr int kPropertyCases = 120;  // seeded cases per property claim
constexpr std::uint64_t kSeedBase = 0x464f524bull;  // claim-local seeds derive from this

inline std::string part_summary(const ExplorationResult<std::int64_t>& res) {
    std::ostringstream out;
    out << to_string(res.status);
    if (res.status == PartStatus::Finite) out << ':' << res.count;
    return out.str();
}

inline std::map<std::string, int> census(const std::vector<Q64>& members) {
    std::map<std::string, int> out{{"key", 0}, {"wing", 0}, {"tip", 0}, {"acyclic", 0},
                                   {"other", 0}};
    for (const auto& m : members) {
        auto rep = classify(m);
        if (rep.is_key())
            ++out["key"];
        else if (rep.is_wing())
            ++out["wing"];
        else if (rep.is_tip())
            ++out["tip"];
        else if (rep.acyclic)
            ++out["acyclic"];
        else
            ++out["other"];
    }
    return out;
}

inline std::string census_summary(const ExplorationResult<std::int64_t>& res) {
    std::ostringstream out;
    out << part_summary(res);
    if (res.status == PartStatus::Finite) {
        for (const auto& [label, count] : census(res.members)) out << ' ' << label << '=' << count;
    }
    return out.str();
}

inline std::string cases_summary(int good, int total) {
    return std::to_string(good) + "/" + std::to_string(total) + " cases";
}

template <class F>
ClaimOutcome counted_cases(int total, F&& body) {
    int good = 0;
    for (int c = 0; c < total; ++c)
        if (body(c)) ++good;
    return {cases_summary(total, total), cases_summary(good, total)};
}

inline bool same_matrix(const Q64& a, const Q64& b) { return a == b; }

// Key with a guaranteed mutable interior vertex r (not k/k', not sink/source).
inline GeneratedKey<std::int64_t> key_with_interior(Rng& rng, Vertex n, int kk) {
    for (;;) {
        auto key = random_key(rng, n, kk);
        for (Vertex r = 0; r < n; ++r)
            if (r != key.k && r != key.kp && !is_sink(key.quiver, r) &&
                !is_source(key.quiver, r))
                return key;
    }
}

}  // namespace verify_detail

// For every full subquiver Q' with >= 2 vertices: the Q' part stays within
// the hereditary bound (max{M, m} for forkless, max{M, 10m-20} for
// pre-forkless), and disconnected subquivers are mutation-finite.
inline std::vector<ClaimResult> check_hereditary_bound(const Q64& q, const Budget& budget,
                                                       PartMode mode,
                                                       const std::string& id_prefix = "hered") {
    std::vector<ClaimResult> out;
    auto part_of = [&](const Q64& x) {
        return mode == PartMode::Forkless ? forkless_part(x, budget)
                                          : preforkless_part(x, budget);
    };
    auto whole = part_of(q);
    auto push = [&](std::string id, std::string expected, std::string observed,
                    ClaimStatus status, double ms) {
        out.push_back({std::move(id), Provenance::Theory, status, std::move(expected),
                       std::move(observed), ms});
    };
    if (whole.status != PartStatus::Finite) {
        push(id_prefix + "_whole", "finite part", verify_detail::part_summary(whole),
             ClaimStatus::Skipped, 0);
        return out;
    }
    const std::uint64_t M = whole.count;
    const Vertex n = q.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexList keep;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) keep.push_back(v);
        if (keep.size() < 2) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream id;
        id << id_prefix << "_sub";
        for (Vertex v : keep) id << '_' << v;
        auto sub = full_subquiver(q, keep);
        const std::uint64_t m = keep.size();
        // forkless bound: max{M, m}; pre-forkless bound: max{M, 10m - 20}
        std::uint64_t bound = mode == PartMode::Forkless ? std::max(M, m)
                                                         : std::max(M, 10 * m - 20);
        std::ostringstream expected, observed;
        ClaimStatus status;
        if (!is_connected(sub.quiver)) {
            auto fin = mutation_finiteness(sub.quiver, budget);
            expected << "disconnected: mutation-finite";
            if (fin.status == FinitenessStatus::Finite) {
                observed << expected.str();
                status = ClaimStatus::Pass;
            } else {
                observed << "disconnected: " << to_string(fin.status);
                status = ClaimStatus::Fail;
            }
        } else {
            auto part = part_of(sub.quiver);
            expected << "count <= " << bound;
            if (part.status == PartStatus::BudgetExceeded) {
                observed << "budget-exceeded";
                status = ClaimStatus::Skipped;
            } else {
                std::uint64_t count = part.status == PartStatus::Empty ? 0 : part.count;
                if (count <= bound) {
                    observed << expected.str();
                    status = ClaimStatus::Pass;
                } else {
                    observed << "count = " << count << " > " << bound;
                    status = ClaimStatus::Fail;
                }
            }
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        push(id.str(), expected.str(), observed.str(), status, ms);
    }
    return out;
}

// ---- the claim registry ----------------------------------------------------------

std::vector<Claim> builtin_claims();

inline std::vector<ClaimResult> run_claims(const Budget& budget,
                                           const std::string& filter = "") {
    std::vector<ClaimResult> results;
    for (const auto& claim : builtin_claims()) {
        if (!filter.empty() && claim.id.find(filter) == std::string::npos) continue;
        ClaimResult res;
        res.id = claim.id;
        res.provenance = claim.provenance;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ClaimOutcome out = claim.run(budget);
            res.expected = out.expected;
            res.observed = out.observed;
            res.note = out.note;
            res.status = out.skipped ? ClaimStatus::Skipped
                         : out.expected == out.observed ? ClaimStatus::Pass
                                                        : ClaimStatus::Fail;
        } catch (const std::exception& e) {
            res.expected = "no exception";
            res.observed = std::string("exception: ") + e.what();
            res.status = ClaimStatus::Fail;
        }
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        results.push_back(std::move(res));
    }
    return results;
}

inline json to_json(const std::vector<ClaimResult>& results) {
    json claims = json::array();
    for (const auto& r : results)
        json c{{"id", r.id},
               {"expected", r.expected},
               {"observed", r.observed},
               {"provenance", to_string(r.provenance)},
               {"status", to_string(r.status)},
               {"ms", r.ms}};
        if (!r.note.empty()) c["note"] = r.note;
        claims.push_back(std::move(c));
    return json{{"claims", std::move(claims)}};
}

inline std::string to_table(const std::vector<ClaimResult>& results) {
    std::size_t idw = 4;
    for (const auto& r : results) idw = std::max(idw, r.id.size());
    std::ostringstream out;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : results) {
        (r.status == ClaimStatus::Pass ? pass : r.status == ClaimStatus::Fail ? fail : skip)++;
        out << (r.status == ClaimStatus::Pass   ? "PASS "
                : r.status == ClaimStatus::Fail ? "FAIL "
                                                : "SKIP ")
            << r.id << std::string(idw - r.id.size() + 2, ' ') << '[' << to_string(r.provenance)
            << "] expected: " << r.expected;
        if (r.status != ClaimStatus::Pass) out << "  observed: " << r.observed;
        if (!r.note.empty()) out << "  {" << r.note << '}';
        out << "  (" << static_cast<long long>(r.ms) << " ms)\n";
    }
    out << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return out.str();
}

}  // namespace forkless

// defined out of line for readability
#include "forkless/claims.hpp"
