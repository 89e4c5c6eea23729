#pragma once

#include <random>
#include <vector>

#include "rstack/complex.hpp"
#include "rstack/generators.hpp"

namespace fixtures {

/// Random complex on [n] generated by `count` random subsets of size
/// 1..max_size.
inline rstack::SimplicialComplex random_complex(int n, int count, int max_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<rstack::Face> faces;
    for (int i = 0; i < count; ++i) {
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
        rstack::Face f;
        while (f.size() < size) f = f.with(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        faces.push_back(f);
    }
    return rstack::SimplicialComplex::from_faces(n, std::move(faces));
}

/// The seeded stacked spheres used by the property suites: d in 2..4 and
/// n in d+2..12.
struct StackedCase {
    int d;
    int n;
    std::uint64_t seed;
};

inline std::vector<StackedCase> stacked_cases(int count) {
    std::vector<StackedCase> out;
    for (int i = 0; i < count; ++i) {
        const int d = 2 + i % 3;
        const int n = d + 2 + (i * 7) % (12 - d - 1);
        out.push_back({d, n, static_cast<std::uint64_t>(1000 + i)});
    }
    return out;
}

inline std::vector<rstack::SimplicialComplex> named_fixtures() {
    using namespace rstack;
    return {simplex_boundary(2), simplex_boundary(3), full_simplex(3), kuhnel_lassmann(3, 5), kuhnel_lassmann(3, 7),
            kuhnel_lassmann(4, 7), klee_novik(4, 1), klee_novik(5, 1), join_boundaries(2, 2), cross_polytope(3),
            stacked_sphere(3, 8, 5), stacked_ball(4, 9, 3)};
}

}  // namespace fixtures
