#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rstack/complex.hpp"

namespace rstack {

/// ∂σ^d on [d+1]: every d-subset. d >= 1.
SimplicialComplex simplex_boundary(int d);
/// σ^d: the single facet [d+1]. d >= 1.
SimplicialComplex full_simplex(int d);

/// K_{d,n}: the n cyclic windows {i, ..., i+d-1} mod n on [n]. A warning is
/// written to std::clog when n < 2d - 1.
SimplicialComplex kuhnel_lassmann(int d, int n);

/// B_{d,i} on [2d] with x_j -> 2j-1 and y_j -> 2j: sign sequences
/// (z_1, ..., z_d) with at most i positions k in 1..d-1 where z_k and
/// z_{k+1} come from different alphabets. 0 <= i <= d-2.
SimplicialComplex klee_novik(int d, int i);

/// ∂σ^r on [r+1] joined with ∂σ^s on r+2..r+s+2.
SimplicialComplex join_boundaries(int r, int s);

/// Stellar subdivisions of ∂σ^d, one new vertex at a time, until n vertices.
/// The facet to subdivide is `raw % facet_count` where raw is the next output
/// of std::mt19937_64 seeded with `seed`. n >= d + 2.
SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed);

/// stacked_sphere(d, n, seed) with one facet removed (drawn from the same
/// generator stream): a stacked (d-1)-ball.
SimplicialComplex stacked_ball(int d, int n, std::uint64_t seed);

/// Boundary of the d-dimensional cross-polytope on [2d]; antipodal pairs
/// {2j-1, 2j}. d >= 1.
SimplicialComplex cross_polytope(int d);

enum class Family {
    simplex_boundary,
    full_simplex,
    kuhnel_lassmann,
    klee_novik,
    join_boundaries,
    stacked_sphere,
    cross_polytope,
};

struct FamilySpec {
    Family family = Family::simplex_boundary;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

const char* family_name(Family f);
/// Inverse of family_name; throws std::invalid_argument on unknown names.
Family parse_family(const std::string& name);
std::vector<std::string> family_names();

/// Dispatches to the constructor; throws std::invalid_argument on a wrong
/// parameter count or out-of-range parameters.
SimplicialComplex generate(const FamilySpec& spec);

}  // namespace rstack
