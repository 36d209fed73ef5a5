#pragma once

// File formats and exports.
//
// Canonical JSON quiver: {"n": int, "arrows": [[i, j, m], ...]} with m > 0,
// one entry per unordered pair, arrows listed in row-major order of the
// positive direction. A "names" array is accepted and echoed back when the
// vertices carry non-default labels; arrow endpoints may then be given as
// names instead of indices.
//
// Canonical text quiver: first non-comment line "n", then one "i j m" line
// per arrow; '#' starts a comment. Vertex tokens are indices when all of
// them parse as integers in [0, n), otherwise all are treated as names and
// assigned dense indices in first-appearance order.

#include "forkless/classify.hpp"
#include "forkless/explore.hpp"
#include "forkless/quiver.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

namespace forkless {

using json = nlohmann::json;

struct parse_error : quiver_error {
    using quiver_error::quiver_error;
};

inline std::vector<std::string> default_names(Vertex n) {
    std::vector<std::string> names(n);
    for (Vertex i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

template <class S = std::int64_t>
struct NamedQuiver {
    Quiver<S> quiver;
    std::vector<std::string> names;

    bool custom_names() const { return names != default_names(quiver.vertex_count()); }

    Vertex vertex_named(const std::string& name) const {
        for (Vertex i = 0; i < quiver.vertex_count(); ++i)
            if (names[i] == name) return i;
        // fall back to a numeric index
        Vertex v{};
        auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
        if (ec == std::errc{} && p == name.data() + name.size() && v >= 0 &&
            v < quiver.vertex_count())
            return v;
        throw parse_error("unknown vertex '" + name + "'");
    }
};

namespace detail {

inline bool parse_index(const std::string& tok, Vertex n, Vertex& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size() && out >= 0 && out < n;
}

template <class S>
bool parse_mult(const std::string& tok, S& out) {
    long long v;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return false;
    out = static_cast<S>(v);
    return true;
}

}  // namespace detail

// ---- quiver <-> json ---------------------------------------------------------

template <class S>
json to_json(const NamedQuiver<S>& nq) {
    json arrows = json::array();
    for (const auto& a : nq.quiver.arrows()) arrows.push_back({a.from, a.to, a.mult});
    json out{{"n", nq.quiver.vertex_count()}, {"arrows", std::move(arrows)}};
    if (nq.custom_names()) out["names"] = nq.names;
    return out;
}

template <class S = std::int64_t>
NamedQuiver<S> quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
        throw parse_error("quiver JSON needs fields 'n' and 'arrows'");
    if (!j["n"].is_number_integer()) throw parse_error("field 'n' must be an integer");
    const Vertex n = j["n"].get<Vertex>();
    if (n < 0) throw parse_error("field 'n' must be nonnegative");
    std::vector<std::string> names;
    if (j.contains("names")) {
        names = j["names"].get<std::vector<std::string>>();
        if (static_cast<Vertex>(names.size()) != n)
            throw parse_error("field 'names' must list exactly n names");
    }
    auto intern = [&](const json& endpoint) -> Vertex {
        if (endpoint.is_number_integer()) {
            Vertex v = endpoint.get<Vertex>();
            if (v < 0 || v >= n) throw index_out_of_range("arrow endpoint out of range");
            return v;
        }
        if (!endpoint.is_string()) throw parse_error("arrow endpoint must be an index or name");
        const std::string name = endpoint.get<std::string>();
        for (Vertex i = 0; i < static_cast<Vertex>(names.size()); ++i)
            if (names[i] == name) return i;
        if (static_cast<Vertex>(names.size()) >= n)
            throw parse_error("more vertex names than n: '" + name + "'");
        names.push_back(name);
        return static_cast<Vertex>(names.size()) - 1;
    };
    std::vector<Arrow<S>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 3)
            throw parse_error("each arrow must be a [from, to, multiplicity] triple");
        Vertex from = intern(a[0]);
        Vertex to = intern(a[1]);
        if (!a[2].is_number_integer()) throw parse_error("arrow multiplicity must be an integer");
        arrows.push_back({from, to, a[2].get<S>()});
    }
    if (names.empty()) names = default_names(n);
    while (static_cast<Vertex>(names.size()) < n)
        names.push_back(std::to_string(names.size()));
    return {Quiver<S>::from_arrows(n, arrows), std::move(names)};
}

// ---- quiver <-> text ---------------------------------------------------------

template <class S>
std::string to_text(const NamedQuiver<S>& nq) {
    std::ostringstream out;
    out << nq.quiver.vertex_count() << '\n';
    for (const auto& a : nq.quiver.arrows())
        out << nq.names[a.from] << ' ' << nq.names[a.to] << ' ' << a.mult << '\n';
    return out.str();
}

template <class S = std::int64_t>
NamedQuiver<S> quiver_from_text(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<int> linenos;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        rows.push_back(std::move(toks));
        linenos.push_back(lineno);
    }
    if (rows.empty()) throw parse_error("empty quiver file");
    if (rows[0].size() != 1)
        throw parse_error("line " + std::to_string(linenos[0]) +
                          ": expected the vertex count alone");
    Vertex n = 0;
    if (!detail::parse_index(rows[0][0], std::numeric_limits<Vertex>::max(), n))
        throw parse_error("line " + std::to_string(linenos[0]) + ": bad vertex count");

    bool all_indices = true;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 3)
            throw parse_error("line " + std::to_string(linenos[r]) +
                              ": expected 'from to multiplicity'");
        Vertex tmp;
        if (!detail::parse_index(rows[r][0], n, tmp) || !detail::parse_index(rows[r][1], n, tmp))
            all_indices = false;
    }
    std::vector<std::string> names;
    auto intern = [&](const std::string& tok, int ln) -> Vertex {
        if (all_indices) {
            Vertex v = 0;
            detail::parse_index(tok, n, v);
            return v;
        }
        for (Vertex i = 0; i < static_cast<Vertex>(names.size()); ++i)
            if (names[i] == tok) return i;
        if (static_cast<Vertex>(names.size()) >= n)
            throw parse_error("line " + std::to_string(ln) + ": more vertex names than n");
        names.push_back(tok);
        return static_cast<Vertex>(names.size()) - 1;
    };
    std::vector<Arrow<S>> arrows;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        Vertex from = intern(rows[r][0], linenos[r]);
        Vertex to = intern(rows[r][1], linenos[r]);
        S mult;
        if (!detail::parse_mult(rows[r][2], mult))
            throw parse_error("line " + std::to_string(linenos[r]) + ": bad multiplicity");
        arrows.push_back({from, to, mult});
    }
    if (names.empty()) names = default_names(n);
    while (static_cast<Vertex>(names.size()) < n)
        names.push_back(std::to_string(names.size()));
    return {Quiver<S>::from_arrows(n, arrows), std::move(names)};
}

enum class QuiverFormat { Json, Text };

template <class S = std::int64_t>
NamedQuiver<S> parse_quiver(const std::string& bytes, QuiverFormat fmt) {
    if (fmt == QuiverFormat::Json) {
        json j = json::parse(bytes, nullptr, false);
        if (j.is_discarded()) throw parse_error("malformed JSON");
        return quiver_from_json<S>(j);
    }
    return quiver_from_text<S>(bytes);
}

// First meaningful byte '{' means JSON.
template <class S = std::int64_t>
NamedQuiver<S> parse_quiver_auto(const std::string& bytes) {
    for (char c : bytes) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return parse_quiver<S>(bytes, c == '{' ? QuiverFormat::Json : QuiverFormat::Text);
    }
    throw parse_error("empty quiver input");
}

// ---- classification report ----------------------------------------------------

inline json to_json(const ClassificationReport& r) {
    json j;
    j["acyclic"] = r.acyclic;
    j["abundant"] = r.abundant;
    j["fork_returns"] = r.fork_returns;
    json kp = json::array();
    for (const auto& p : r.key_pairs) kp.push_back({p.first, p.second});
    j["key_pairs"] = std::move(kp);
    json pf = json::array();
    for (const auto& t : r.prefork_triples) pf.push_back({t.r, t.k, t.kp});
    j["prefork_triples"] = std::move(pf);
    json ww = json::array();
    for (const auto& w : r.wing_witnesses) ww.push_back({w.k, w.kp});
    j["wing_witnesses"] = std::move(ww);
    json tw = json::array();
    for (const auto& t : r.tip_witnesses) tw.push_back({t.kp, t.k});
    j["tip_witnesses"] = std::move(tw);
    j["class"] = to_string(r.dominant_class());
    j["plain"] = r.plain();
    j["boundary"] = r.boundary();
    return j;
}

// ---- graph exports --------------------------------------------------------------

template <class S>
json to_json(const MutationGraph<S>& g, const std::vector<std::string>& names) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& node = g.nodes[i];
        nodes.push_back({{"id", i},
                         {"depth", node.depth},
                         {"boundary", node.boundary},
                         {"class", to_string(node.report.dominant_class())},
                         {"quiver", to_json(NamedQuiver<S>{node.quiver, names})},
                         {"report", to_json(node.report)}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.from, e.v, e.to});
    return json{{"root", g.root}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline const char* class_color(QuiverClass c) {
    switch (c) {
        case QuiverClass::Fork: return "lightcoral";
        case QuiverClass::Prefork: return "orange";
        case QuiverClass::Wing: return "gold";
        case QuiverClass::Tip: return "khaki";
        case QuiverClass::Key: return "lightsteelblue";
        case QuiverClass::AbundantAcyclic: return "palegreen";
        case QuiverClass::Acyclic: return "honeydew";
        case QuiverClass::Other: return "white";
    }
    return "white";
}

// Undirected DOT rendering of an explored graph: one node per quiver,
// colored by class, boundary nodes dashed, edges labelled by the mutation
// vertex.
template <class S>
std::string to_dot(const MutationGraph<S>& g, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "graph mutation_graph {\n  node [shape=box, style=filled];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& node = g.nodes[i];
        out << "  q" << i << " [label=\"#" << i << ' '
            << to_string(node.report.dominant_class()) << "\\nd=" << node.depth
            << "\", fillcolor=\"" << class_color(node.report.dominant_class()) << '"';
        if (node.boundary) out << ", style=\"filled,dashed\"";
        out << "];\n";
    }
    for (const auto& e : g.edges)
        out << "  q" << e.from << " -- q" << e.to << " [label=\"" << names[e.v] << "\"];\n";
    out << "}\n";
    return out.str();
}

// Directed DOT rendering of a single quiver (arrows with multiplicities).
template <class S>
std::string to_dot(const NamedQuiver<S>& nq) {
    std::ostringstream out;
    out << "digraph quiver {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < nq.quiver.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << nq.names[v] << "\"];\n";
    for (const auto& a : nq.quiver.arrows())
        out << "  v" << a.from << " -> v" << a.to << " [label=\"" << a.mult << "\"];\n";
    out << "}\n";
    return out.str();
}

// ---- result exports --------------------------------------------------------------

inline json to_json(const ExploreStats& st) {
    json j{{"complete", st.complete},
           {"reason", to_string(st.reason)},
           {"expanded", st.expanded},
           {"max_weight_seen", st.max_weight_seen},
           {"frontier_size", st.frontier.size()}};
    if (st.offending_edge)
        j["offending_edge"] = {st.offending_edge->first, st.offending_edge->second};
    return j;
}

template <class S>
json to_json(const EscapeResult<S>& esc, const std::vector<std::string>& names) {
    json j;
    switch (esc.status) {
        case EscapeStatus::Found: j["status"] = "found"; break;
        case EscapeStatus::AllExcluded: j["status"] = "all-excluded"; break;
        case EscapeStatus::Unknown: j["status"] = "unknown"; break;
    }
    j["visited"] = esc.visited;
    j["sequence"] = esc.sequence;
    if (esc.found) j["found"] = to_json(NamedQuiver<S>{*esc.found, names});
    return j;
}

template <class S>
json to_json(const ExplorationResult<S>& res, const std::vector<std::string>& names,
             bool include_graph = false) {
    json j;
    j["mode"] = to_string(res.mode);
    j["status"] = to_string(res.status);
    j["count"] = res.count;
    json members = json::array();
    for (const auto& m : res.members) members.push_back(to_json(NamedQuiver<S>{m, names}));
    j["members"] = std::move(members);
    j["boundary"] = {{"forks", res.boundary_forks}, {"preforks", res.boundary_preforks}};
    if (res.escape) j["escape"] = to_json(*res.escape, names);
    if (res.exploration) {
        j["stats"] = to_json(res.exploration->stats);
        if (include_graph) j["graph"] = to_json(res.exploration->graph, names);
    }
    return j;
}

template <class S>
json to_json(const FinitenessResult<S>& res, const std::vector<std::string>& names) {
    json j;
    j["status"] = to_string(res.status);
    j["visited"] = res.visited;
    if (res.status == FinitenessStatus::Finite) j["class_size"] = res.class_size;
    if (res.fork_witness) {
        std::vector<std::string> wnames = names;
        if (!res.witness_component.empty()) {
            wnames.clear();
            for (Vertex v : res.witness_component) wnames.push_back(names[v]);
            j["witness_component"] = res.witness_component;
        }
        j["fork_witness"] = to_json(NamedQuiver<S>{*res.fork_witness, wnames});
        j["sequence"] = res.sequence;
    }
    return j;
}

}  // namespace forkless
