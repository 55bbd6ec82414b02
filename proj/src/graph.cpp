#include "cramer_lgv/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

namespace {

std::string join_labels(std::span<const std::string> labels, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += sep;
        out += labels[i];
    }
    return out;
}

// Kahn's algorithm with a min-heap on insertion index. Returns the order, which
// is short of n vertices iff the graph has a cycle.
std::vector<std::size_t> kahn_order(const std::vector<std::vector<WeightedDigraph::OutEdge>>& out,
                                    std::vector<std::size_t>& indegree) {
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < indegree.size(); ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<std::size_t> order;
    order.reserve(indegree.size());
    while (!ready.empty()) {
        const std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (const auto& e : out[v]) {
            if (--indegree[e.target] == 0) ready.push(e.target);
        }
    }
    return order;
}

// Every vertex left over by Kahn has a predecessor that is also left over, so
// walking predecessors must eventually revisit a vertex.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<WeightedDigraph::OutEdge>>& out,
                                    const std::vector<std::size_t>& residual_indegree) {
    const std::size_t n = out.size();
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (residual_indegree[u] == 0) continue;
        for (const auto& e : out[u]) {
            if (residual_indegree[e.target] > 0) preds[e.target].push_back(u);
        }
    }
    std::size_t start = 0;
    while (residual_indegree[start] == 0) ++start;

    std::vector<std::size_t> walk;
    std::vector<std::ptrdiff_t> position(n, -1);
    std::size_t v = start;
    while (position[v] < 0) {
        position[v] = static_cast<std::ptrdiff_t>(walk.size());
        walk.push_back(v);
        v = preds[v].front();
    }
    std::vector<std::size_t> cycle(walk.begin() + position[v], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    // Report from the earliest-declared vertex so the message is canonical.
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    cycle.push_back(cycle.front());
    return cycle;
}

}  // namespace

std::vector<VertexId> to_vertex_ids(std::span<const std::string> labels) {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) ids.emplace_back(l);
    return ids;
}

std::optional<std::size_t> WeightedDigraph::index_of(const VertexId& v) const {
    const auto it = index_.find(v.label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WeightedDigraph::require_index(const VertexId& v) const {
    const auto idx = index_of(v);
    if (!idx) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + v.label + "\"");
    }
    return *idx;
}

std::optional<Rational> WeightedDigraph::edge_weight(const VertexId& from, const VertexId& to) const {
    const auto u = index_of(from);
    const auto v = index_of(to);
    if (!u || !v) return std::nullopt;
    const auto& edges = out_[*u];
    const auto it = std::lower_bound(edges.begin(), edges.end(), *v,
                                     [](const OutEdge& e, std::size_t t) { return e.target < t; });
    if (it == edges.end() || it->target != *v) return std::nullopt;
    return it->weight;
}

WeightedDigraph WeightedDigraph::without_vertex(const VertexId& removed) const {
    require_index(removed);
    std::vector<VertexId> vertices;
    for (const auto& v : vertices_) {
        if (v != removed) vertices.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
        if (e.from != removed && e.to != removed) edges.push_back(e);
    }
    return build_digraph(std::move(vertices), std::move(edges));
}

WeightedDigraph build_digraph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    WeightedDigraph g;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& label = vertices[i].label;
        if (label.empty()) {
            throw Error(ErrorCode::ParseError, "vertex labels must be nonempty");
        }
        if (!g.index_.emplace(label, i).second) {
            throw Error(ErrorCode::DuplicateVertex, "duplicate vertex \"" + label + "\"");
        }
    }
    g.out_.resize(vertices.size());
    std::vector<std::size_t> indegree(vertices.size(), 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
        const auto from = g.index_.find(e.from.label);
        const auto to = g.index_.find(e.to.label);
        if (from == g.index_.end() || to == g.index_.end()) {
            const auto& missing = from == g.index_.end() ? e.from.label : e.to.label;
            throw Error(ErrorCode::UnknownEndpoint,
                        "edge " + e.from.label + "->" + e.to.label + " uses undeclared vertex \"" + missing + "\"");
        }
        if (from->second == to->second) {
            throw Error(ErrorCode::SelfLoop, "self-loop at \"" + e.from.label + "\"");
        }
        if (!seen.emplace(from->second, to->second).second) {
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + e.from.label + "->" + e.to.label);
        }
        g.out_[from->second].push_back({to->second, e.weight});
        ++indegree[to->second];
    }
    for (auto& list : g.out_) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.target < b.target; });
    }

    g.topo_ = kahn_order(g.out_, indegree);
    if (g.topo_.size() != vertices.size()) {
        std::vector<std::string> labels;
        for (std::size_t v : find_cycle(g.out_, indegree)) labels.push_back(vertices[v].label);
        const std::string msg = "graph has a directed cycle: " + join_labels(labels, " -> ");
        throw CycleError(std::move(labels), msg);
    }
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

std::vector<VertexId> topological_order(const WeightedDigraph& g) {
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    for (std::size_t v : g.topological_indices()) order.push_back(g.vertex(v));
    return order;
}

namespace {

// reaches[v] iff some path v -> target exists.
std::vector<bool> reaches_target(const WeightedDigraph& g, std::size_t target) {
    std::vector<bool> reaches(g.vertex_count(), false);
    reaches[target] = true;
    const auto topo = g.topological_indices();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (const auto& e : g.out_edges(*it)) {
            if (reaches[e.target]) {
                reaches[*it] = true;
                break;
            }
        }
    }
    return reaches;
}

[[noreturn]] void cap_exceeded(const VertexId& s, const VertexId& t, std::size_t cap) {
    throw Error(ErrorCode::CapExceeded,
                "more than " + std::to_string(cap) + " paths from " + s.label + " to " + t.label);
}

}  // namespace

std::vector<Path> enumerate_paths(const WeightedDigraph& g, const VertexId& s, const VertexId& t,
                                  std::size_t cap) {
    const std::size_t source = g.require_index(s);
    const std::size_t target = g.require_index(t);
    const auto reaches = reaches_target(g, target);

    std::vector<Path> result;
    if (!reaches[source]) return result;

    std::vector<std::size_t> stack{source};
    std::vector<Rational> prefix_weight{Rational(1)};
    std::function<void()> extend = [&] {
        const std::size_t v = stack.back();
        if (v == target) {
            if (result.size() == cap) cap_exceeded(s, t, cap);
            Path p;
            p.vertices.reserve(stack.size());
            for (std::size_t u : stack) p.vertices.push_back(g.vertex(u));
            p.weight = prefix_weight.back();
            result.push_back(std::move(p));
            return;
        }
        for (const auto& e : g.out_edges(v)) {
            if (!reaches[e.target]) continue;
            stack.push_back(e.target);
            prefix_weight.push_back(prefix_weight.back() * e.weight);
            extend();
            prefix_weight.pop_back();
            stack.pop_back();
        }
    };
    extend();
    return result;
}

std::size_t count_paths(const WeightedDigraph& g, const VertexId& s, const VertexId& t, std::size_t cap) {
    const std::size_t source = g.require_index(s);
    const std::size_t target = g.require_index(t);
    const std::size_t limit = cap + 1;
    std::vector<std::size_t> count(g.vertex_count(), 0);
    count[target] = 1;
    const auto topo = g.topological_indices();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        if (*it == target) continue;
        std::size_t c = 0;
        for (const auto& e : g.out_edges(*it)) {
            c = std::min(limit, c + count[e.target]);
        }
        count[*it] = c;
    }
    return count[source];
}

Rational path_weight(const WeightedDigraph& g, std::span<const VertexId> vertices) {
    if (vertices.empty()) {
        throw Error(ErrorCode::NotAPath, "a path needs at least one vertex");
    }
    g.require_index(vertices.front());
    Rational w(1);
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        const auto edge = g.edge_weight(vertices[k - 1], vertices[k]);
        if (!edge) {
            throw Error(ErrorCode::NotAPath,
                        "no edge " + vertices[k - 1].label + "->" + vertices[k].label);
        }
        w *= *edge;
    }
    return w;
}

Path make_path(const WeightedDigraph& g, std::vector<VertexId> vertices) {
    Rational w = path_weight(g, vertices);
    return Path{std::move(vertices), std::move(w)};
}

Path concat(const Path& first, const Path& second) {
    if (first.vertices.empty() || second.vertices.empty() || first.target() != second.source()) {
        throw Error(ErrorCode::JunctionMismatch,
                    "cannot join a path ending at " + (first.vertices.empty() ? "?" : first.target().label) +
                        " with one starting at " + (second.vertices.empty() ? "?" : second.source().label));
    }
    Path joined;
    joined.vertices = first.vertices;
    joined.vertices.insert(joined.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    std::unordered_set<std::string> labels;
    for (const auto& v : joined.vertices) {
        if (!labels.insert(v.label).second) {
            throw Error(ErrorCode::VertexRepeated, "joined path repeats vertex " + v.label);
        }
    }
    joined.weight = first.weight * second.weight;
    return joined;
}

}  // namespace cramer_lgv
