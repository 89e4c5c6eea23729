#include "rstack/generators.hpp"

#include <iostream>
#include <random>
#include <stdexcept>

namespace rstack {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

std::vector<Face> subsets_of_size(Face ground, int k) {
    std::vector<Face> out;
    for_each_subset_of_size(ground, k, [&](Face f) { out.push_back(f); });
    return out;
}

// Facet list of the stacked sphere, before closure.
std::vector<Face> stacked_facets(int d, int n, std::mt19937_64& rng) {
    std::vector<Face> facets = subsets_of_size(Face::range(d + 1), d);
    for (Vertex fresh = d + 2; fresh <= n; ++fresh) {
        const std::size_t pick = static_cast<std::size_t>(rng() % facets.size());
        const Face old = facets[pick];
        facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
        old.for_each_vertex([&](Vertex v) { facets.push_back(old.without(v).with(fresh)); });
    }
    return facets;
}

void check_stacked_params(int d, int n) {
    require(d >= 1, "stacked_sphere: d must be >= 1");
    require(n >= d + 2, "stacked_sphere: n must be >= d + 2");
    require(n <= kMaxVertices, "stacked_sphere: n exceeds the vertex limit");
}

}  // namespace

SimplicialComplex simplex_boundary(int d) {
    require(d >= 1 && d < kMaxVertices, "simplex_boundary: d must lie in [1, 63]");
    return SimplicialComplex::from_faces(d + 1, subsets_of_size(Face::range(d + 1), d));
}

SimplicialComplex full_simplex(int d) {
    require(d >= 1 && d < kMaxVertices, "full_simplex: d must lie in [1, 63]");
    return SimplicialComplex::from_faces(d + 1, {Face::range(d + 1)});
}

SimplicialComplex kuhnel_lassmann(int d, int n) {
    require(d >= 1, "kuhnel_lassmann: d must be >= 1");
    require(n >= d && n <= kMaxVertices, "kuhnel_lassmann: n must lie in [d, 64]");
    if (n < 2 * d - 1)
        std::clog << "warning: kuhnel_lassmann(" << d << ", " << n << "): n < 2d - 1, not a manifold\n";
    std::vector<Face> facets;
    for (int i = 1; i <= n; ++i) {
        Face f;
        for (int k = 0; k < d; ++k) f = f.with((i - 1 + k) % n + 1);
        facets.push_back(f);
    }
    return SimplicialComplex::from_faces(n, std::move(facets));
}

SimplicialComplex klee_novik(int d, int i) {
    require(d >= 2 && 2 * d <= kMaxVertices, "klee_novik: d must lie in [2, 32]");
    require(i >= 0 && i <= d - 2, "klee_novik: i must lie in [0, d-2]");
    std::vector<Face> facets;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << d); ++signs) {
        // bit j-1 set: z_j = y_j
        const int transitions = std::popcount((signs ^ (signs >> 1)) & ((std::uint64_t{1} << (d - 1)) - 1));
        if (transitions > i) continue;
        Face f;
        for (int j = 1; j <= d; ++j) f = f.with(((signs >> (j - 1)) & 1U) ? 2 * j : 2 * j - 1);
        facets.push_back(f);
    }
    return SimplicialComplex::from_faces(2 * d, std::move(facets));
}

SimplicialComplex join_boundaries(int r, int s) {
    require(r >= 1 && s >= 1, "join_boundaries: r and s must be >= 1");
    require(r + s + 2 <= kMaxVertices, "join_boundaries: too many vertices");
    const int n = r + s + 2;
    std::vector<Face> second;
    for (Face f : subsets_of_size(Face::range(s + 1), s)) second.emplace_back(f.bits() << (r + 1));
    return join(simplex_boundary(r), SimplicialComplex::from_faces(n, std::move(second)));
}

SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
    check_stacked_params(d, n);
    std::mt19937_64 rng(seed);
    return SimplicialComplex::from_faces(n, stacked_facets(d, n, rng));
}

SimplicialComplex stacked_ball(int d, int n, std::uint64_t seed) {
    check_stacked_params(d, n);
    std::mt19937_64 rng(seed);
    std::vector<Face> facets = stacked_facets(d, n, rng);
    facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(rng() % facets.size()));
    return SimplicialComplex::from_faces(n, std::move(facets));
}

SimplicialComplex cross_polytope(int d) {
    require(d >= 1 && 2 * d <= kMaxVertices, "cross_polytope: d must lie in [1, 32]");
    std::vector<Face> facets;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << d); ++signs) {
        Face f;
        for (int j = 1; j <= d; ++j) f = f.with(((signs >> (j - 1)) & 1U) ? 2 * j : 2 * j - 1);
        facets.push_back(f);
    }
    return SimplicialComplex::from_faces(2 * d, std::move(facets));
}

const char* family_name(Family f) {
    switch (f) {
        case Family::simplex_boundary: return "simplex-boundary";
        case Family::full_simplex: return "full-simplex";
        case Family::kuhnel_lassmann: return "kuhnel-lassmann";
        case Family::klee_novik: return "klee-novik";
        case Family::join_boundaries: return "join-boundaries";
        case Family::stacked_sphere: return "stacked-sphere";
        case Family::cross_polytope: return "cross-polytope";
    }
    return "?";
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (Family f : {Family::simplex_boundary, Family::full_simplex, Family::kuhnel_lassmann, Family::klee_novik,
                     Family::join_boundaries, Family::stacked_sphere, Family::cross_polytope})
        out.emplace_back(family_name(f));
    return out;
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::simplex_boundary, Family::full_simplex, Family::kuhnel_lassmann, Family::klee_novik,
                     Family::join_boundaries, Family::stacked_sphere, Family::cross_polytope})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

SimplicialComplex generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t count) {
        require(p.size() == count, std::string(family_name(spec.family)) + " takes " + std::to_string(count) +
                                       " parameter(s), got " + std::to_string(p.size()));
    };
    switch (spec.family) {
        case Family::simplex_boundary: arity(1); return simplex_boundary(p[0]);
        case Family::full_simplex: arity(1); return full_simplex(p[0]);
        case Family::kuhnel_lassmann: arity(2); return kuhnel_lassmann(p[0], p[1]);
        case Family::klee_novik: arity(2); return klee_novik(p[0], p[1]);
        case Family::join_boundaries: arity(2); return join_boundaries(p[0], p[1]);
        case Family::stacked_sphere: arity(2); return stacked_sphere(p[0], p[1], spec.seed.value_or(0));
        case Family::cross_polytope: arity(1); return cross_polytope(p[0]);
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace rstack
