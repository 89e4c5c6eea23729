#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rstack/complex.hpp"
#include "rstack/homology.hpp"

namespace rstack {

// Index conventions. A "level" is the stackedness degree itself: level-s
// stacked means no interior faces of dimension <= dim - s - 1. The theorem
// index r used by the enumerative, reconstruction and local criteria decides
// level r - 1. Every verdict records both.

enum class Criterion { interior_faces, h_double_prime, delta_reconstruction, local };

const char* criterion_name(Criterion c);

struct StackednessVerdict {
    int r = 1;
    int stack_level = 0;  // always r - 1
    bool verdict = false;
    Criterion criterion = Criterion::interior_faces;
    std::optional<SimplicialComplex> witness;  // Σ (or Δ(r-1) for spheres) on success
    std::vector<std::string> notes;
};

/// Interior-face definition for a homology manifold with nonempty boundary:
/// no interior face of dimension <= dim - level - 1.
StackednessVerdict is_stacked_with_boundary(const SimplicialComplex& complex, int level,
                                            const FieldSpec& field = FieldSpec::rationals());

/// h''_r(Δ) = 0, 1 <= r <= dim + 1; decides level r - 1 for manifolds with
/// nonempty boundary.
StackednessVerdict is_stacked_via_h(const SimplicialComplex& complex, int r,
                                    const FieldSpec& field = FieldSpec::rationals());

/// Closed manifold of dimension d-1: tests whether Σ = Δ(r) is a level r-1
/// stacked manifold with ∂Σ = Δ. Complete for r <= d/2; above that the
/// verdict is only sufficient and is noted as such.
StackednessVerdict is_stacked_closed(const SimplicialComplex& complex, int r,
                                     const FieldSpec& field = FieldSpec::rationals(),
                                     const SearchLimits& limits = SearchLimits::from_environment());

/// Homology (d-1)-sphere, 1 <= r <= (d+1)/2: B = Δ(r-1) must be a homology
/// ball with ∂B = Δ and no interior faces of dimension <= d - r.
StackednessVerdict is_stacked_sphere(const SimplicialComplex& complex, int r,
                                     const FieldSpec& field = FieldSpec::rationals(),
                                     const SearchLimits& limits = SearchLimits::from_environment());

/// Every vertex link passes is_stacked_sphere(·, r).
StackednessVerdict is_locally_stacked(const SimplicialComplex& complex, int r,
                                      const FieldSpec& field = FieldSpec::rationals(),
                                      const SearchLimits& limits = SearchLimits::from_environment());

/// Builds Σ = ∪_v v * D_v with D_v = lk(v)(r-1) and verifies lk_Σ(v) = D_v,
/// ∂Σ = Δ and level r-1 stackedness. Requires a locally stacked closed
/// manifold; outside 1 <= r < d/2 it still runs and notes the fact.
StackednessVerdict local_to_global(const SimplicialComplex& complex, int r,
                                   const FieldSpec& field = FieldSpec::rationals(),
                                   const SearchLimits& limits = SearchLimits::from_environment());

struct ConsequenceCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Betti-number and missing-face vanishing implied by stackedness at `level`
/// (r = level + 1): for manifolds with boundary β_k = 0 for k >= r and no
/// missing faces of dimension >= r+1; for closed manifolds of dimension d-1
/// with r < d/2, β_k = 0 for r <= k <= d-1-r and no missing k-faces for
/// r+1 <= k <= d-r. Throws PreconditionError unless the complex is stacked
/// at that level.
std::vector<ConsequenceCheck> stackedness_consequences(const SimplicialComplex& complex, int level,
                                                       const FieldSpec& field = FieldSpec::rationals(),
                                                       const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace rstack
