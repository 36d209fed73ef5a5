#pragma once

// Budgeted exploration of the labelled mutation graph.
//
// forkless_part:    BFS that never expands forks. Sound because every fork
//                   roots an all-fork tree whose only exit is the point of
//                   return, and the forkless part is connected and convex;
//                   no non-fork lies beyond a fork.
// preforkless_part: BFS that never expands forks or pre-forks. Wings and
//                   tips ARE expanded: the ones adjacent to the part belong
//                   to it (key-subgraph structure), while pre-fork-side wings
//                   and tips sit behind the two mu_r bridge edges of a
//                   pre-fork component and are never reached. The
//                   oracle-agreement tests guard this derivation.

#include "forkless/classify.hpp"
#include "forkless/quiver.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <unordered_map>

namespace forkless {

struct Budget {
    std::size_t max_nodes = 100000;
    std::int64_t max_arrow_weight = 1000000000000000LL;  // 10^15
    std::optional<int> max_depth;
    int workers = 1;

    void validate() const {
        if (max_nodes == 0 || max_arrow_weight <= 0 || (max_depth && *max_depth < 0) ||
            workers < 1)
            throw quiver_error("budget values must be positive");
    }
};

using NodeId = std::int32_t;

enum class StopReason { Completed, NodeBudget, WeightBudget, DepthBudget };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::Completed: return "completed";
        case StopReason::NodeBudget: return "node-budget";
        case StopReason::WeightBudget: return "weight-budget";
        case StopReason::DepthBudget: return "depth-budget";
    }
    return "?";
}

template <class S>
struct MutationGraph {
    struct Node {
        Quiver<S> quiver;
        ClassificationReport report;
        int depth = 0;
        bool boundary = false;  // classified but not expanded
    };
    struct Edge {
        NodeId from;  // the node whose expansion generated the edge
        Vertex v;
        NodeId to;
    };

    std::vector<Node> nodes;  // discovery order; id = position
    std::vector<Edge> edges;  // deduplicated as unordered {from,to} pairs
    NodeId root = 0;

    NodeId find(const Quiver<S>& q) const {
        auto it = index_.find(q);
        return it == index_.end() ? NodeId{-1} : it->second;
    }

    NodeId insert(Quiver<S> q, ClassificationReport report, int depth, bool boundary) {
        NodeId id = static_cast<NodeId>(nodes.size());
        index_.emplace(q, id);
        nodes.push_back(Node{std::move(q), std::move(report), depth, boundary});
        return id;
    }

    bool add_edge(NodeId a, Vertex v, NodeId b) {
        auto key = a <= b ? std::tuple{a, b, v} : std::tuple{b, a, v};
        if (!edge_keys_.insert(key).second) return false;
        edges.push_back(Edge{a, v, b});
        return true;
    }

private:
    std::unordered_map<Quiver<S>, NodeId, QuiverHash<S>> index_;
    std::set<std::tuple<NodeId, NodeId, Vertex>> edge_keys_;
};

struct ExploreStats {
    bool complete = false;
    StopReason reason = StopReason::Completed;
    std::size_t expanded = 0;
    std::int64_t max_weight_seen = 0;
    std::optional<std::pair<NodeId, Vertex>> offending_edge;  // weight violation site
    std::vector<NodeId> frontier;                             // pending at stop
};

template <class S>
struct Exploration {
    MutationGraph<S> graph;
    ExploreStats stats;
};

using ExpandPredicate = std::function<bool(const ClassificationReport&)>;

namespace detail {

template <class S>
std::int64_t weight_of(const Quiver<S>& q) {
    return static_cast<std::int64_t>(max_multiplicity(q));
}

// One generated neighbor, produced (possibly in parallel) before the
// deterministic merge.
template <class S>
struct Candidate {
    NodeId from;
    Vertex v;
    std::optional<Quiver<S>> quiver;  // empty: mutation overflowed
    std::optional<ClassificationReport> report;
    std::int64_t weight = 0;
};

}  // namespace detail

// Breadth-first closure from `start`. A node is expanded (all n neighbors
// generated) iff expand(report) is true, else it is marked boundary. Node
// order is (depth, discovery order under ascending vertex label); results
// are identical for any worker count.
template <class S>
Exploration<S> explore(const Quiver<S>& start, const Budget& budget,
                       const ExpandPredicate& expand) {
    budget.validate();
    Exploration<S> ex;
    auto& g = ex.graph;
    auto& st = ex.stats;
    const Vertex n = start.vertex_count();

    ClassificationReport r0 = classify(start);
    bool root_boundary = !expand(r0) || (budget.max_depth && *budget.max_depth == 0);
    bool depth_clipped = budget.max_depth && *budget.max_depth == 0 && expand(r0);
    st.max_weight_seen = detail::weight_of(start);
    g.insert(start, std::move(r0), 0, root_boundary);

    std::deque<NodeId> queue;
    if (!g.nodes[0].boundary) queue.push_back(0);

    auto stop = [&](StopReason why, std::optional<std::pair<NodeId, Vertex>> edge,
                    NodeId current) {
        st.complete = false;
        st.reason = why;
        st.offending_edge = edge;
        st.frontier.assign(queue.begin(), queue.end());
        st.frontier.insert(st.frontier.begin(), current);
    };

    const int workers = budget.workers;
    while (!queue.empty()) {
        // Take a batch, generate candidates (parallel when asked), merge in order.
        std::size_t batch = workers > 1 ? std::min<std::size_t>(queue.size(), 64) : 1;
        std::vector<NodeId> ids(queue.begin(), queue.begin() + batch);
        std::vector<detail::Candidate<S>> cands(ids.size() * n);
        auto produce = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t t = lo; t < hi; ++t) {
                NodeId id = ids[t / n];
                Vertex v = static_cast<Vertex>(t % n);
                auto& c = cands[t];
                c.from = id;
                c.v = v;
                try {
                    Quiver<S> b = mutate(g.nodes[id].quiver, v);
                    c.weight = detail::weight_of(b);
                    if (c.weight <= budget.max_arrow_weight) c.report = classify(b);
                    c.quiver = std::move(b);
                } catch (const multiplicity_overflow&) {
                    c.quiver.reset();
                }
            }
        };
        if (workers > 1 && cands.size() > 1) {
            std::vector<std::future<void>> futs;
            std::size_t chunk = (cands.size() + workers - 1) / workers;
            for (std::size_t lo = 0; lo < cands.size(); lo += chunk)
                futs.push_back(std::async(std::launch::async, produce, lo,
                                          std::min(lo + chunk, cands.size())));
            for (auto& f : futs) f.get();
        } else {
            produce(0, cands.size());
        }

        for (std::size_t t = 0; t < cands.size(); ++t) {
            auto& c = cands[t];
            if (t % n == 0) {
                queue.pop_front();
                ++st.expanded;
            }
            if (!c.quiver || c.weight > budget.max_arrow_weight) {
                // overflow counts as a weight violation with the edge recorded
                stop(StopReason::WeightBudget, std::pair{c.from, c.v}, c.from);
                return ex;
            }
            st.max_weight_seen = std::max(st.max_weight_seen, c.weight);
            NodeId to = g.find(*c.quiver);
            if (to < 0) {
                if (g.nodes.size() >= budget.max_nodes) {
                    stop(StopReason::NodeBudget, std::nullopt, c.from);
                    return ex;
                }
                int depth = g.nodes[c.from].depth + 1;
                ClassificationReport rep =
                    c.report ? std::move(*c.report) : classify(*c.quiver);
                bool expandable = expand(rep);
                bool clipped = budget.max_depth && depth >= *budget.max_depth;
                if (expandable && clipped) depth_clipped = true;
                bool boundary = !expandable || clipped;
                to = g.insert(std::move(*c.quiver), std::move(rep), depth, boundary);
                if (!boundary) queue.push_back(to);
            }
            g.add_edge(c.from, c.v, to);
        }
    }

    st.complete = !depth_clipped;
    st.reason = depth_clipped ? StopReason::DepthBudget : StopReason::Completed;
    return ex;
}

// ---- escapes ------------------------------------------------------------------

enum class EscapeStatus { Found, AllExcluded, Unknown };

template <class S>
struct EscapeResult {
    EscapeStatus status = EscapeStatus::Unknown;
    std::optional<Quiver<S>> found;  // first non-fork / plain quiver
    MutationSeq sequence;            // mutations from the start to it
    std::size_t visited = 0;
};

namespace detail {

// Shortest-first walk restricted to `moves(report)`; stops at the first
// quiver satisfying `target`. AllExcluded only when the walk closed without
// any move suppressed by the weight budget.
template <class S>
EscapeResult<S> escape_walk(const Quiver<S>& start, const Budget& budget,
                            const std::function<VertexList(const ClassificationReport&)>& moves,
                            const std::function<bool(const ClassificationReport&)>& target) {
    budget.validate();
    EscapeResult<S> res;
    std::vector<Quiver<S>> order;                                   // id -> quiver
    std::vector<std::pair<NodeId, Vertex>> parent;                  // id -> (parent, v)
    std::unordered_map<Quiver<S>, NodeId, QuiverHash<S>> visited;
    std::deque<std::pair<NodeId, ClassificationReport>> queue;

    auto trace = [&](NodeId id) {
        MutationSeq seq;
        while (id != 0) {
            seq.push_back(parent[id].second);
            id = parent[id].first;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    };

    order.push_back(start);
    parent.emplace_back(-1, -1);
    visited.emplace(start, 0);
    queue.emplace_back(0, classify(start));
    bool suppressed = false;

    while (!queue.empty()) {
        auto [id, rep] = std::move(queue.front());
        queue.pop_front();
        for (Vertex v : moves(rep)) {
            Quiver<S> b = order[id];
            try {
                b = mutate(order[id], v);
            } catch (const multiplicity_overflow&) {
                suppressed = true;
                continue;
            }
            if (detail::weight_of(b) > budget.max_arrow_weight) {
                suppressed = true;
                continue;
            }
            if (visited.contains(b)) continue;
            NodeId bid = static_cast<NodeId>(order.size());
            visited.emplace(b, bid);
            order.push_back(b);
            parent.emplace_back(id, v);
            ClassificationReport rb = classify(b);
            if (target(rb)) {
                res.status = EscapeStatus::Found;
                res.found = std::move(b);
                res.sequence = trace(bid);
                res.visited = visited.size();
                return res;
            }
            if (visited.size() >= budget.max_nodes) {
                res.status = EscapeStatus::Unknown;
                res.visited = visited.size();
                return res;
            }
            queue.emplace_back(bid, std::move(rb));
        }
    }
    res.status = suppressed ? EscapeStatus::Unknown : EscapeStatus::AllExcluded;
    res.visited = visited.size();
    return res;
}

}  // namespace detail

// From a fork, walk only through points of return (the only bridges out of
// fork trees), looking for a non-fork.
template <class S>
EscapeResult<S> escape_fork_region(const Quiver<S>& q, const Budget& budget) {
    if (fork_points_of_return(q).empty())
        throw precondition_error("escape_fork_region requires a fork");
    return detail::escape_walk<S>(
        q, budget, [](const ClassificationReport& r) { return r.fork_returns; },
        [](const ClassificationReport& r) { return !r.is_fork(); });
}

// From a fork / pre-fork / wing / tip, walk along the bridge structure:
// fork returns, the {r,k,k'} of pre-fork triples (mu_r crosses the bridge,
// mu_k / mu_k' reach the translate and its bridge), and the {k,k'} of wing
// and tip witnesses. Stops at the first plain quiver.
template <class S>
EscapeResult<S> escape_prefork_region(const Quiver<S>& q, const Budget& budget) {
    if (classify(q).plain())
        throw precondition_error("escape_prefork_region requires a non-plain quiver");
    auto moves = [](const ClassificationReport& r) {
        std::set<Vertex> mv(r.fork_returns.begin(), r.fork_returns.end());
        for (const auto& t : r.prefork_triples) {
            mv.insert(t.r);
            mv.insert(t.k);
            mv.insert(t.kp);
        }
        for (const auto& w : r.wing_witnesses) {
            mv.insert(w.k);
            mv.insert(w.kp);
        }
        for (const auto& t : r.tip_witnesses) {
            mv.insert(t.kp);
            mv.insert(t.k);
        }
        return VertexList(mv.begin(), mv.end());
    };
    return detail::escape_walk<S>(q, budget, moves,
                                  [](const ClassificationReport& r) { return r.plain(); });
}

// ---- parts ---------------------------------------------------------------------

enum class PartStatus { Finite, Empty, BudgetExceeded };

inline const char* to_string(PartStatus s) {
    switch (s) {
        case PartStatus::Finite: return "finite";
        case PartStatus::Empty: return "empty";
        case PartStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

enum class PartMode { Forkless, Preforkless };

inline const char* to_string(PartMode m) {
    return m == PartMode::Forkless ? "forkless" : "preforkless";
}

template <class S>
struct ExplorationResult {
    PartMode mode = PartMode::Forkless;
    PartStatus status = PartStatus::BudgetExceeded;
    std::size_t count = 0;
    std::vector<Quiver<S>> members;  // discovery order
    std::size_t boundary_forks = 0;
    std::size_t boundary_preforks = 0;
    std::optional<EscapeResult<S>> escape;      // when the seed needed one
    std::optional<Exploration<S>> exploration;  // BFS graph + stats, when run
};

namespace detail {

template <class S>
ExplorationResult<S> finish_part(PartMode mode, Exploration<S> ex,
                                 std::optional<EscapeResult<S>> esc) {
    ExplorationResult<S> res;
    res.mode = mode;
    res.escape = std::move(esc);
    for (const auto& node : ex.graph.nodes) {
        if (node.boundary) {
            if (node.report.is_fork())
                ++res.boundary_forks;
            else if (node.report.is_prefork())
                ++res.boundary_preforks;
        } else {
            res.members.push_back(node.quiver);
        }
    }
    res.count = res.members.size();
    res.status = ex.stats.complete ? PartStatus::Finite : PartStatus::BudgetExceeded;
    res.exploration = std::move(ex);
    return res;
}

}  // namespace detail

// All non-forks mutation-equivalent to q. Empty when the escape walk proves
// the whole class consists of forks.
template <class S>
ExplorationResult<S> forkless_part(const Quiver<S>& q, const Budget& budget = {}) {
    std::optional<EscapeResult<S>> esc;
    Quiver<S> seed = q;
    if (!fork_points_of_return(q).empty()) {
        esc = escape_fork_region(q, budget);
        if (esc->status == EscapeStatus::AllExcluded) {
            ExplorationResult<S> res;
            res.mode = PartMode::Forkless;
            res.status = PartStatus::Empty;
            res.escape = std::move(esc);
            return res;
        }
        if (esc->status == EscapeStatus::Unknown) {
            ExplorationResult<S> res;
            res.mode = PartMode::Forkless;
            res.status = PartStatus::BudgetExceeded;
            res.escape = std::move(esc);
            return res;
        }
        seed = *esc->found;
    }
    auto ex = explore(seed, budget,
                      [](const ClassificationReport& r) { return !r.is_fork(); });
    return detail::finish_part(PartMode::Forkless, std::move(ex), std::move(esc));
}

// The pre-forkless part: BFS from a plain seed, never expanding forks or
// pre-forks. Wings/tips reached from the plain side are members; the ones on
// the far side of a pre-fork bridge are sealed off behind unexpanded nodes.
template <class S>
ExplorationResult<S> preforkless_part(const Quiver<S>& q, const Budget& budget = {}) {
    std::optional<EscapeResult<S>> esc;
    Quiver<S> seed = q;
    if (!classify(q).plain()) {
        esc = escape_prefork_region(q, budget);
        if (esc->status == EscapeStatus::AllExcluded) {
            ExplorationResult<S> res;
            res.mode = PartMode::Preforkless;
            res.status = PartStatus::Empty;
            res.escape = std::move(esc);
            return res;
        }
        if (esc->status == EscapeStatus::Unknown) {
            ExplorationResult<S> res;
            res.mode = PartMode::Preforkless;
            res.status = PartStatus::BudgetExceeded;
            res.escape = std::move(esc);
            return res;
        }
        seed = *esc->found;
    }
    auto ex = explore(seed, budget, [](const ClassificationReport& r) {
        return !r.is_fork() && !r.is_prefork();
    });
    return detail::finish_part(PartMode::Preforkless, std::move(ex), std::move(esc));
}

// ---- mutation finiteness ---------------------------------------------------------

enum class FinitenessStatus { Finite, Infinite, Unknown };

inline const char* to_string(FinitenessStatus s) {
    switch (s) {
        case FinitenessStatus::Finite: return "finite";
        case FinitenessStatus::Infinite: return "infinite";
        case FinitenessStatus::Unknown: return "unknown";
    }
    return "?";
}

template <class S>
struct FinitenessResult {
    FinitenessStatus status = FinitenessStatus::Unknown;
    std::uint64_t class_size = 0;          // when Finite
    std::optional<Quiver<S>> fork_witness; // when Infinite
    MutationSeq sequence;                  // discovery sequence to the witness
    VertexList witness_component;          // component the witness lives in, if input was disconnected
    std::size_t visited = 0;
};

namespace detail {

// Lean BFS with early exit at the first fork: a fork witness proves
// mutation-infinity for connected quivers.
template <class S>
FinitenessResult<S> finiteness_connected(const Quiver<S>& q, const Budget& budget) {
    FinitenessResult<S> res;
    std::vector<Quiver<S>> order{q};
    std::vector<std::pair<NodeId, Vertex>> parent{{-1, -1}};
    std::unordered_map<Quiver<S>, NodeId, QuiverHash<S>> visited{{q, 0}};
    auto trace = [&](NodeId id) {
        MutationSeq seq;
        while (id != 0) {
            seq.push_back(parent[id].second);
            id = parent[id].first;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    };
    if (!fork_points_of_return(q).empty()) {
        res.status = FinitenessStatus::Infinite;
        res.fork_witness = q;
        res.visited = 1;
        return res;
    }
    std::deque<NodeId> queue{0};
    const Vertex n = q.vertex_count();
    while (!queue.empty()) {
        NodeId id = queue.front();
        queue.pop_front();
        for (Vertex v = 0; v < n; ++v) {
            Quiver<S> b = order[id];
            try {
                b = mutate(order[id], v);
            } catch (const multiplicity_overflow&) {
                res.status = FinitenessStatus::Unknown;
                res.visited = visited.size();
                return res;
            }
            if (weight_of(b) > budget.max_arrow_weight) {
                res.status = FinitenessStatus::Unknown;
                res.visited = visited.size();
                return res;
            }
            if (visited.contains(b)) continue;
            NodeId bid = static_cast<NodeId>(order.size());
            visited.emplace(b, bid);
            order.push_back(b);
            parent.emplace_back(id, v);
            if (!fork_points_of_return(order.back()).empty()) {
                res.status = FinitenessStatus::Infinite;
                res.fork_witness = order.back();
                res.sequence = trace(bid);
                res.visited = visited.size();
                return res;
            }
            if (visited.size() >= budget.max_nodes) {
                res.status = FinitenessStatus::Unknown;
                res.visited = visited.size();
                return res;
            }
            queue.push_back(bid);
        }
    }
    res.status = FinitenessStatus::Finite;
    res.class_size = visited.size();
    res.visited = visited.size();
    return res;
}

}  // namespace detail

// Connected quivers: BFS with early exit at the first fork (a proof of
// mutation-infinity). Disconnected quivers are handled componentwise; the
// labelled class is the product of the component classes.
template <class S>
FinitenessResult<S> mutation_finiteness(const Quiver<S>& q, const Budget& budget = {}) {
    budget.validate();
    auto comps = connected_components(q);
    if (comps.size() <= 1) return detail::finiteness_connected(q, budget);
    FinitenessResult<S> total;
    total.status = FinitenessStatus::Finite;
    total.class_size = 1;
    for (const auto& comp : comps) {
        auto sub = full_subquiver(q, comp);
        auto r = detail::finiteness_connected(sub.quiver, budget);
        total.visited += r.visited;
        if (r.status == FinitenessStatus::Infinite) {
            total.status = FinitenessStatus::Infinite;
            total.class_size = 0;
            total.fork_witness = std::move(r.fork_witness);
            total.witness_component = comp;
            total.sequence.clear();
            for (Vertex v : r.sequence) total.sequence.push_back(sub.index_map[v]);
            return total;
        }
        if (r.status == FinitenessStatus::Unknown) {
            total.status = FinitenessStatus::Unknown;
            total.class_size = 0;
            return total;
        }
        std::uint64_t next;
        if (__builtin_mul_overflow(total.class_size, r.class_size, &next)) {
            total.status = FinitenessStatus::Unknown;
            total.class_size = 0;
            return total;
        }
        total.class_size = next;
    }
    return total;
}

}  // namespace forkless
