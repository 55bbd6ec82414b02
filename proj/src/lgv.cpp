#include "cramer_lgv/lgv.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
    std::vector<bool> hit(images.size(), false);
    for (std::size_t v : images) {
        if (v >= images.size() || hit[v]) {
            throw Error(ErrorCode::SizeMismatch, "not a permutation of 0.." + std::to_string(images.size()));
        }
        hit[v] = true;
    }
    Permutation p;
    p.sign = permutation_sign(images);
    p.images = std::move(images);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) {
        throw Error(ErrorCode::SizeMismatch, "composing permutations of different sizes");
    }
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images[other.images[i]];
    return from_images(std::move(out));
}

bool is_vertex_disjoint(std::span<const Path> paths) {
    std::unordered_set<std::string> used;
    for (const auto& p : paths) {
        for (const auto& v : p.vertices) {
            if (!used.insert(v.label).second) return false;
        }
    }
    return true;
}

PathSystem make_path_system(Permutation sigma, std::vector<Path> paths) {
    if (paths.size() != sigma.size()) {
        throw Error(ErrorCode::SizeMismatch, "path system needs one path per permutation entry");
    }
    PathSystem ps;
    ps.weight = Rational(1);
    for (const auto& p : paths) ps.weight *= p.weight;
    ps.vertex_disjoint = is_vertex_disjoint(paths);
    ps.sigma = std::move(sigma);
    ps.paths = std::move(paths);
    return ps;
}

namespace {

void check_roles(const WeightedDigraph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks) {
    if (sources.empty() || sources.size() != sinks.size()) {
        throw Error(ErrorCode::SizeMismatch,
                    "need equally many sources and sinks, at least one (got " + std::to_string(sources.size()) +
                        " and " + std::to_string(sinks.size()) + ")");
    }
    auto check_list = [&](std::span<const VertexId> list, const char* role) {
        std::unordered_set<std::string> seen;
        for (const auto& v : list) {
            g.require_index(v);
            if (!seen.insert(v.label).second) {
                throw Error(ErrorCode::DuplicateInRole,
                            std::string("vertex \"") + v.label + "\" listed twice among " + role);
            }
        }
    };
    check_list(sources, "sources");
    check_list(sinks, "sinks");
}

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t limit) {
    std::size_t out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > limit) return limit;
    return out;
}

}  // namespace

PathMatrix path_matrix(const WeightedDigraph& g, std::span<const VertexId> sources,
                       std::span<const VertexId> sinks) {
    check_roles(g, sources, sinks);
    const std::size_t n = sources.size();
    PathMatrix pm{{sources.begin(), sources.end()}, {sinks.begin(), sinks.end()}, Matrix(n)};
    const auto topo = g.topological_indices();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t target = g.require_index(sinks[j]);
        // to_target[v] = sum of weights of all paths v -> target
        std::vector<Rational> to_target(g.vertex_count());
        to_target[target] = Rational(1);
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            if (*it == target) continue;
            Rational acc;
            for (const auto& e : g.out_edges(*it)) {
                if (!to_target[e.target].is_zero()) acc += e.weight * to_target[e.target];
            }
            to_target[*it] = std::move(acc);
        }
        for (std::size_t i = 0; i < n; ++i) {
            pm.entries(i, j) = to_target[g.require_index(sources[i])];
        }
    }
    return pm;
}

std::vector<PathSystem> enumerate_path_systems(const WeightedDigraph& g, std::span<const VertexId> sources,
                                               std::span<const VertexId> sinks, std::size_t cap) {
    check_roles(g, sources, sinks);
    if (cap == 0) {
        throw Error(ErrorCode::CapExceeded, "path-system cap must be positive");
    }
    const std::size_t n = sources.size();
    const std::size_t limit = cap + 1;

    std::vector<std::size_t> counts(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) counts[i * n + j] = count_paths(g, sources[i], sinks[j], cap);
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::size_t total = 0;
    do {
        std::size_t product = 1;
        for (std::size_t i = 0; i < n && product > 0; ++i) {
            product = saturating_mul(product, counts[i * n + sigma[i]], limit);
        }
        total = std::min(limit, total + product);
    } while (total <= cap && std::next_permutation(sigma.begin(), sigma.end()));
    if (total > cap) {
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " path systems");
    }

    std::vector<std::vector<Path>> paths(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // A pair over the cap can only sit in permutations whose product is 0.
            if (counts[i * n + j] > 0 && counts[i * n + j] <= cap) paths[i * n + j] = enumerate_paths(g, sources[i], sinks[j], cap);
        }
    }

    std::vector<PathSystem> systems;
    systems.reserve(total);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<const std::vector<Path>*> choices(n);
        bool empty = false;
        for (std::size_t i = 0; i < n; ++i) {
            choices[i] = &paths[i * n + sigma[i]];
            empty = empty || choices[i]->empty();
        }
        if (empty) continue;
        const Permutation perm = Permutation::from_images(sigma);
        // Odometer over path tuples, last position fastest.
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<Path> chosen;
            chosen.reserve(n);
            for (std::size_t i = 0; i < n; ++i) chosen.push_back((*choices[i])[pick[i]]);
            systems.push_back(make_path_system(perm, std::move(chosen)));

            std::size_t pos = n;
            while (pos > 0 && ++pick[pos - 1] == choices[pos - 1]->size()) {
                pick[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return systems;
}

Rational signed_sum(std::span<const PathSystem> systems, bool vd_only) {
    Rational sum;
    for (const auto& ps : systems) {
        if (vd_only && !ps.vertex_disjoint) continue;
        if (ps.sign() > 0) {
            sum += ps.weight;
        } else {
            sum -= ps.weight;
        }
    }
    return sum;
}

LgvReport verify_lgv(const WeightedDigraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, std::size_t cap) {
    PathMatrix pm = path_matrix(g, sources, sinks);
    const Rational det = det_bareiss(pm.entries);
    const auto systems = enumerate_path_systems(g, sources, sinks, cap);
    LgvReport report{
        .n = sources.size(),
        .matrix = std::move(pm),
        .det_path_matrix = det,
        .all_systems_signed_sum = signed_sum(systems, false),
        .vd_systems_signed_sum = signed_sum(systems, true),
        .total_systems = systems.size(),
        .vd_systems = static_cast<std::size_t>(std::count_if(
            systems.begin(), systems.end(), [](const PathSystem& ps) { return ps.vertex_disjoint; })),
    };
    report.pass = report.det_path_matrix == report.all_systems_signed_sum &&
                  report.all_systems_signed_sum == report.vd_systems_signed_sum;
    return report;
}

}  // namespace cramer_lgv
