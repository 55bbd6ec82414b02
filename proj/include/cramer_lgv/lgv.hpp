#ifndef CRAMER_LGV_LGV_HPP
#define CRAMER_LGV_LGV_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cramer_lgv/graph.hpp"
#include "cramer_lgv/linalg.hpp"
#include "cramer_lgv/rational.hpp"

namespace cramer_lgv {

/// Permutation of 0..n-1; images[i] is the image of i.
struct Permutation {
    std::vector<std::size_t> images;
    int sign = 1;

    static Permutation identity(std::size_t n);
    /// Throws SizeMismatch unless images is a permutation of 0..n-1.
    static Permutation from_images(std::vector<std::size_t> images);

    std::size_t size() const { return images.size(); }
    /// (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// entries(i, j) is the total weight of all paths sources[i] -> sinks[j].
struct PathMatrix {
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    Matrix entries;
};

/// paths[i] runs sources[i] -> sinks[sigma.images[i]].
struct PathSystem {
    Permutation sigma;
    std::vector<Path> paths;
    Rational weight{1};
    bool vertex_disjoint = true;

    int sign() const { return sigma.sign; }
    std::size_t size() const { return paths.size(); }

    friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// Assembles a system and fills in weight and vertex_disjoint.
PathSystem make_path_system(Permutation sigma, std::vector<Path> paths);

struct LgvReport {
    std::size_t n = 0;
    PathMatrix matrix;
    Rational det_path_matrix;
    Rational all_systems_signed_sum;
    Rational vd_systems_signed_sum;
    std::size_t total_systems = 0;
    std::size_t vd_systems = 0;
    bool pass = false;
};

/// Backward dynamic programme along the topological order, one pass per sink.
/// Throws SizeMismatch, UnknownVertex, DuplicateInRole.
PathMatrix path_matrix(const WeightedDigraph& g, std::span<const VertexId> sources,
                       std::span<const VertexId> sinks);

/**
 * Every path system from sources to sinks: each permutation sigma (in
 * lexicographic order) crossed with every tuple of paths
 * sources[i] -> sinks[sigma(i)] (tuples in lexicographic order, first path
 * varying slowest).
 *
 * `cap` bounds the total number of systems, sum over sigma of the product of
 * path counts; it is checked before anything is materialized and exceeding it
 * throws CapExceeded.
 */
std::vector<PathSystem> enumerate_path_systems(const WeightedDigraph& g, std::span<const VertexId> sources,
                                               std::span<const VertexId> sinks, std::size_t cap = kDefaultCap);

bool is_vertex_disjoint(std::span<const Path> paths);
inline bool is_vertex_disjoint(const PathSystem& ps) { return is_vertex_disjoint(ps.paths); }

/// Sum of sign * weight over the systems (only vertex-disjoint ones if vd_only).
Rational signed_sum(std::span<const PathSystem> systems, bool vd_only);

LgvReport verify_lgv(const WeightedDigraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, std::size_t cap = kDefaultCap);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_LGV_HPP
