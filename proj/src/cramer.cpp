#include "cramer_lgv/cramer.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::CertificateInvalid, "certificate invalid: " + what);
}

void check_column(std::size_t column, std::size_t n) {
    if (column >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(column + 1) + " out of range 1.." + std::to_string(n));
    }
}

std::vector<PathSystem> vertex_disjoint_only(std::vector<PathSystem> systems) {
    std::erase_if(systems, [](const PathSystem& ps) { return !ps.vertex_disjoint; });
    return systems;
}

}  // namespace

std::vector<VertexId> CramerGadget::sinks_with_x_at(std::size_t column) const {
    check_column(column, size());
    std::vector<VertexId> sinks = col_vertices;
    sinks[column] = sink;
    return sinks;
}

CramerGadget build_gadget(const Matrix& coeff, std::span<const Rational> x) {
    const std::size_t n = coeff.size();
    if (x.size() != n) {
        throw Error(ErrorCode::SizeMismatch,
                    "gadget needs " + std::to_string(n) + " x-weights, got " + std::to_string(x.size()));
    }
    std::vector<VertexId> rows, cols;
    for (std::size_t i = 1; i <= n; ++i) {
        rows.emplace_back("A" + std::to_string(i));
        cols.emplace_back("B" + std::to_string(i));
    }
    VertexId sink("X");

    std::vector<VertexId> vertices = rows;
    vertices.insert(vertices.end(), cols.begin(), cols.end());
    vertices.push_back(sink);

    std::vector<Edge> edges;
    edges.reserve(n * n + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) edges.push_back({rows[i], cols[j], coeff(i, j)});
    }
    for (std::size_t j = 0; j < n; ++j) edges.push_back({cols[j], sink, x[j]});

    return CramerGadget{build_digraph(std::move(vertices), std::move(edges)),
                        std::move(rows),
                        std::move(cols),
                        std::move(sink),
                        coeff,
                        {x.begin(), x.end()}};
}

WeightedDigraph gadget_without_sink(const CramerGadget& gadget) {
    return gadget.graph.without_vertex(gadget.sink);
}

bool row_sum_identity_check(const CramerGadget& gadget) {
    const auto expected = multiply(gadget.coeff, gadget.x_weights);
    for (std::size_t j = 0; j < gadget.size(); ++j) {
        Rational total;
        for (const auto& p : enumerate_paths(gadget.graph, gadget.row_vertices[j], gadget.sink)) {
            total += p.weight;
        }
        if (total != expected[j]) return false;
    }
    return true;
}

bool column_identity_check(const CramerGadget& gadget, std::size_t column) {
    const auto sinks = gadget.sinks_with_x_at(column);
    const auto pm = path_matrix(gadget.graph, gadget.row_vertices, sinks);
    const auto ax = multiply(gadget.coeff, gadget.x_weights);
    return pm.entries == replace_column(gadget.coeff, column, ax);
}

std::vector<Rational> solve_cramer(const LinearSystem& sys) {
    const std::size_t n = sys.matrix.size();
    if (sys.rhs.size() != n) {
        throw Error(ErrorCode::SizeMismatch, "right-hand side length does not match matrix size");
    }
    const Rational det = det_bareiss(sys.matrix);
    if (n <= kLeibnizMaxSize) {
        const Rational check = det_leibniz(sys.matrix);
        if (check != det) {
            throw Error(ErrorCode::InternalDisagreement,
                        "Bareiss determinant " + det.to_string() + " disagrees with Leibniz " + check.to_string());
        }
    }
    if (det.is_zero()) {
        throw Error(ErrorCode::SingularMatrix, "singular matrix: det(A) = 0");
    }
    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(det_bareiss(replace_column(sys.matrix, i, sys.rhs)) / det);
    }
    return x;
}

PathSystem extend_system(const PathSystem& base, const CramerGadget& gadget, std::size_t column) {
    check_column(column, gadget.size());
    const VertexId& bi = gadget.col_vertices[column];
    const auto it = std::find_if(base.paths.begin(), base.paths.end(),
                                 [&](const Path& p) { return !p.vertices.empty() && p.target() == bi; });
    if (it == base.paths.end()) {
        invalid("no member path ends at " + bi.label);
    }
    const Path edge{{bi, gadget.sink}, gadget.x_weights[column]};
    std::vector<Path> paths = base.paths;
    paths[static_cast<std::size_t>(it - base.paths.begin())] = concat(*it, edge);
    return make_path_system(base.sigma, std::move(paths));
}

void validate_certificate(const Certificate& cert, const CramerGadget& gadget) {
    const std::size_t n = gadget.size();
    const std::size_t i = cert.index;
    check_column(i, n);
    if (cert.solution != gadget.x_weights) invalid("gadget weights differ from the solution");

    if (cert.base_systems.size() != cert.extended_systems.size()) {
        invalid("base and extended system counts differ (" + std::to_string(cert.base_systems.size()) + " vs " +
                std::to_string(cert.extended_systems.size()) + ")");
    }
    if (cert.pairing.size() != cert.base_systems.size()) invalid("pairing does not cover every base system");

    std::vector<bool> base_hit(cert.base_systems.size(), false);
    std::vector<bool> ext_hit(cert.extended_systems.size(), false);
    for (const auto& [b, e] : cert.pairing) {
        if (b >= base_hit.size() || e >= ext_hit.size()) invalid("pairing index out of range");
        if (base_hit[b] || ext_hit[e]) invalid("pairing is not a bijection");
        base_hit[b] = ext_hit[e] = true;

        const PathSystem& base = cert.base_systems[b];
        const PathSystem& ext = cert.extended_systems[e];
        if (!base.vertex_disjoint || !ext.vertex_disjoint) invalid("paired system is not vertex-disjoint");
        if (extend_system(base, gadget, i) != ext) {
            invalid("extended system " + std::to_string(e) + " is not the extension of base system " +
                    std::to_string(b));
        }
        if (ext.sign() != base.sign()) invalid("sign changed under extension");
        if (ext.weight != cert.solution[i] * base.weight) invalid("weight not scaled by x_i");
    }

    if (signed_sum(cert.base_systems, true) != cert.det_A) invalid("base signed sum differs from det(A)");
    if (signed_sum(cert.extended_systems, true) != cert.det_Ai) invalid("extended signed sum differs from det(A_i)");
    if (cert.det_Ai != cert.solution[i] * cert.det_A) invalid("det(A_i) != x_i * det(A)");
}

Certificate certify(const LinearSystem& sys, std::size_t column, const CertifyOptions& options) {
    const std::size_t n = sys.matrix.size();
    check_column(column, n);
    if (n > options.max_size) {
        throw Error(ErrorCode::SizeTooLarge, "certificates are limited to n <= " + std::to_string(options.max_size));
    }

    Certificate cert;
    cert.index = column;
    cert.coeff = sys.matrix;
    cert.rhs = sys.rhs;
    cert.solution = solve_cramer(sys);

    const CramerGadget gadget = build_gadget(sys.matrix, cert.solution);
    if (!row_sum_identity_check(gadget)) invalid("row sums of paths into X differ from A x");
    if (!column_identity_check(gadget, column)) invalid("path matrix with X differs from A_i");

    cert.sources = gadget.row_vertices;
    cert.base_sinks = gadget.col_vertices;
    cert.extended_sinks = gadget.sinks_with_x_at(column);
    cert.base_systems = vertex_disjoint_only(
        enumerate_path_systems(gadget_without_sink(gadget), cert.sources, cert.base_sinks, options.cap));
    cert.extended_systems = vertex_disjoint_only(
        enumerate_path_systems(gadget.graph, cert.sources, cert.extended_sinks, options.cap));

    // Every extended system must be hit exactly once.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> ext_by_sigma;
    for (std::size_t e = 0; e < cert.extended_systems.size(); ++e) {
        ext_by_sigma[cert.extended_systems[e].sigma.images].push_back(e);
    }
    std::vector<bool> ext_hit(cert.extended_systems.size(), false);
    for (std::size_t b = 0; b < cert.base_systems.size(); ++b) {
        const PathSystem image = extend_system(cert.base_systems[b], gadget, column);
        if (!image.vertex_disjoint) invalid("extension of base system " + std::to_string(b) + " is not vertex-disjoint");
        const auto& candidates = ext_by_sigma[image.sigma.images];
        const auto match = std::find_if(candidates.begin(), candidates.end(),
                                        [&](std::size_t e) { return cert.extended_systems[e] == image; });
        if (match == candidates.end()) invalid("extension of base system " + std::to_string(b) + " not enumerated");
        if (ext_hit[*match]) invalid("two base systems extend to the same system");
        ext_hit[*match] = true;
        cert.pairing.emplace_back(b, *match);
    }
    if (std::find(ext_hit.begin(), ext_hit.end(), false) != ext_hit.end()) {
        invalid("some vertex-disjoint system through X is not an extension");
    }

    cert.det_A = det_bareiss(sys.matrix);
    cert.det_Ai = det_bareiss(replace_column(sys.matrix, column, sys.rhs));
    validate_certificate(cert, gadget);
    return cert;
}

}  // namespace cramer_lgv
