#ifndef CRAMER_LGV_CRAMER_HPP
#define CRAMER_LGV_CRAMER_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cramer_lgv/graph.hpp"
#include "cramer_lgv/lgv.hpp"
#include "cramer_lgv/linalg.hpp"

namespace cramer_lgv {

/**
 * Three-layer digraph for a coefficient matrix and a vector of weights:
 *
 *   row vertices A1..An --(coeff(i,j))--> column vertices B1..Bn --(x_j)--> X
 *
 * Every A_i -> B_j edge is present, including zero-weight ones, so the graph
 * always has 2n + 1 vertices and n^2 + n edges. Vertex insertion order is
 * A1..An, B1..Bn, X.
 */
struct CramerGadget {
    WeightedDigraph graph;
    std::vector<VertexId> row_vertices;
    std::vector<VertexId> col_vertices;
    VertexId sink;
    Matrix coeff;
    std::vector<Rational> x_weights;

    std::size_t size() const { return coeff.size(); }
    /// B1..Bn with X substituted at position `column`.
    std::vector<VertexId> sinks_with_x_at(std::size_t column) const;
};

CramerGadget build_gadget(const Matrix& coeff, std::span<const Rational> x);

/// The gadget with X and its in-edges removed.
WeightedDigraph gadget_without_sink(const CramerGadget& gadget);

/// For every row j: total weight of paths A_j -> X equals row_j(coeff) . x.
bool row_sum_identity_check(const CramerGadget& gadget);

/// The path matrix with X at position `column` equals coeff with that column
/// replaced by coeff * x. Throws IndexOutOfRange.
bool column_identity_check(const CramerGadget& gadget, std::size_t column);

/// x_i = det(A_i) / det(A) with Bareiss determinants; det(A) is cross-checked
/// against the Leibniz expansion for n <= 8. Throws SingularMatrix.
std::vector<Rational> solve_cramer(const LinearSystem& sys);

/// Appends the edge B_column -> X to the one member path ending at B_column.
/// The permutation is untouched, so the sign is preserved.
PathSystem extend_system(const PathSystem& base, const CramerGadget& gadget, std::size_t column);

struct Certificate {
    std::size_t index = 0;  // 0-based column
    Matrix coeff{1};
    std::vector<Rational> rhs;
    std::vector<Rational> solution;
    Rational det_A;
    Rational det_Ai;
    std::vector<VertexId> sources;
    std::vector<VertexId> base_sinks;
    std::vector<VertexId> extended_sinks;
    std::vector<PathSystem> base_systems;
    std::vector<PathSystem> extended_systems;
    /// (base index, extended index)
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
};

struct CertifyOptions {
    std::size_t cap = kDefaultCap;
    std::size_t max_size = 6;
};

/**
 * Solves the system, builds the gadget with the solution as X-edge weights,
 * enumerates the vertex-disjoint systems with and without X, pairs them via
 * extend_system and validates the result before returning it.
 *
 * Throws IndexOutOfRange, SizeTooLarge (n > options.max_size), SingularMatrix,
 * CapExceeded, and CertificateInvalid if any invariant fails.
 */
Certificate certify(const LinearSystem& sys, std::size_t column, const CertifyOptions& options = {});

/// Re-checks every certificate invariant against its gadget. Throws
/// CertificateInvalid naming the first violation.
void validate_certificate(const Certificate& cert, const CramerGadget& gadget);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_CRAMER_HPP
