#ifndef CRAMER_LGV_GRAPH_HPP
#define CRAMER_LGV_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cramer_lgv/rational.hpp"

namespace cramer_lgv {

inline constexpr std::size_t kDefaultCap = 1'000'000;

struct VertexId {
    std::string label;

    VertexId() = default;
    explicit VertexId(std::string l) : label(std::move(l)) {}

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::vector<VertexId> to_vertex_ids(std::span<const std::string> labels);

struct Edge {
    VertexId from;
    VertexId to;
    Rational weight;
};

/// Vertex sequence plus the product of its edge weights. A single vertex is
/// the empty path at that vertex, with weight 1.
struct Path {
    std::vector<VertexId> vertices;
    Rational weight{1};

    const VertexId& source() const { return vertices.front(); }
    const VertexId& target() const { return vertices.back(); }
    std::size_t edge_count() const { return vertices.size() - 1; }

    friend bool operator==(const Path&, const Path&) = default;
};

/**
 * Finite simple acyclic digraph with rational edge weights.
 *
 * Instances are immutable and only obtainable through build_digraph, which
 * enforces: unique nonempty labels, declared endpoints, no self-loops, at most
 * one edge per ordered pair and acyclicity. A topological order (Kahn, ties
 * broken by insertion order) is computed once at construction.
 *
 * Vertices are addressed either by label or by insertion index; out-edges of
 * each vertex are kept sorted by target index.
 */
class WeightedDigraph {
public:
    struct OutEdge {
        std::size_t target;
        Rational weight;
    };

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const VertexId> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const OutEdge> out_edges(std::size_t v) const { return out_[v]; }
    std::span<const std::size_t> topological_indices() const { return topo_; }

    const VertexId& vertex(std::size_t index) const { return vertices_.at(index); }
    bool contains(const VertexId& v) const { return index_.contains(v.label); }
    std::optional<std::size_t> index_of(const VertexId& v) const;
    /// Throws UnknownVertex.
    std::size_t require_index(const VertexId& v) const;

    std::optional<Rational> edge_weight(const VertexId& from, const VertexId& to) const;

    /// Induced subgraph on every vertex except `removed`.
    WeightedDigraph without_vertex(const VertexId& removed) const;

private:
    friend WeightedDigraph build_digraph(std::vector<VertexId>, std::vector<Edge>);
    WeightedDigraph() = default;

    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<OutEdge>> out_;
    std::vector<std::size_t> topo_;
};

WeightedDigraph build_digraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

std::vector<VertexId> topological_order(const WeightedDigraph& g);

/// All directed paths s -> t in lexicographic order of their vertex-index
/// sequences. Throws CapExceeded once more than `cap` paths are found.
std::vector<Path> enumerate_paths(const WeightedDigraph& g, const VertexId& s, const VertexId& t,
                                  std::size_t cap = kDefaultCap);

/// Number of s -> t paths, saturating at cap + 1.
std::size_t count_paths(const WeightedDigraph& g, const VertexId& s, const VertexId& t,
                        std::size_t cap = kDefaultCap);

Rational path_weight(const WeightedDigraph& g, std::span<const VertexId> vertices);
inline Rational path_weight(const WeightedDigraph& g, const Path& p) {
    return path_weight(g, p.vertices);
}

/// Validates the sequence against g and attaches its weight.
Path make_path(const WeightedDigraph& g, std::vector<VertexId> vertices);

Path concat(const Path& first, const Path& second);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_GRAPH_HPP
