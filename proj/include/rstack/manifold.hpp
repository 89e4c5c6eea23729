#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rstack/complex.hpp"
#include "rstack/homology.hpp"

namespace rstack {

/// Betti numbers of lk_Δ(F) for every F in `faces`, in input order. Each link
/// is independent, so the parallel policy spreads them over threads; the
/// result is identical to the serial one.
std::vector<BettiVector> link_betti_profiles(const SimplicialComplex& complex, std::span<const Face> faces,
                                             const FieldSpec& field, ExecPolicy policy = ExecPolicy::parallel);

/// Result of one scan over the links of every face of a pure complex of
/// dimension d. "Top" for a face F means index d - #F.
struct LinkScan {
    int dim = -1;
    std::vector<Face> faces;         // all faces, ∅ first
    std::vector<BettiVector> links;  // parallel to faces
    bool empty_link_is_sphere = false;           // F = ∅ has the sphere profile
    bool nonempty_links_are_spheres = false;     // every F ≠ ∅ has the sphere profile
    bool condition_i = false;                    // every F ≠ ∅: zero off top, top in {0,1}
    bool cohen_macaulay = false;                 // every F: zero off top
    bool nonempty_links_cohen_macaulay = false;  // every F ≠ ∅: zero off top
};

LinkScan scan_links(const SimplicialComplex& complex, const FieldSpec& field,
                    ExecPolicy policy = ExecPolicy::parallel);

/// Throws PreconditionError on the void complex.
bool is_pure(const SimplicialComplex& complex);
/// At least one vertex and the 1-skeleton is connected.
bool is_connected(const SimplicialComplex& complex);

// The predicates below throw PreconditionError on non-pure input.

bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                        ExecPolicy policy = ExecPolicy::parallel);
/// Homology manifold without boundary: every vertex link is a homology sphere.
bool is_closed_manifold(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                        ExecPolicy policy = ExecPolicy::parallel);

/// ∂Δ = {F ≠ ∅ : β_{d-#F}(lk F) = 0} ∪ {∅}. Throws PreconditionError when
/// condition (i) fails or the face set is not a pure (d-1)-complex. Closed
/// manifolds give {∅}.
SimplicialComplex boundary_complex(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                                   ExecPolicy policy = ExecPolicy::parallel);

/// Conditions (i) and (ii). A closed manifold qualifies with ∂Δ = {∅}.
bool is_manifold_with_boundary(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                               ExecPolicy policy = ExecPolicy::parallel);

/// Δ ∖ ∂Δ grouped by dimension (index k holds the interior k-faces, k = 0..dim).
std::vector<std::vector<Face>> interior_faces(const SimplicialComplex& complex,
                                              const FieldSpec& field = FieldSpec::rationals(),
                                              ExecPolicy policy = ExecPolicy::parallel);

bool is_homology_ball(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                      ExecPolicy policy = ExecPolicy::parallel);

/// β_d over Q equals 1. Requires a connected closed homology manifold (over
/// Q or GF(2)).
bool is_orientable(const SimplicialComplex& complex);

/// Every face link has homology only in dimension dim(Δ) - #F.
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                       ExecPolicy policy = ExecPolicy::parallel);
/// Pure, and every vertex link is Cohen–Macaulay.
bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                  ExecPolicy policy = ExecPolicy::parallel);

struct ClassificationReport {
    FieldSpec field = FieldSpec::rationals();
    bool is_pure = false;
    bool is_connected = false;
    bool is_cohen_macaulay = false;
    bool is_buchsbaum = false;
    bool is_homology_sphere = false;
    bool is_homology_ball = false;
    bool is_closed_manifold = false;
    bool is_manifold_with_boundary = false;
    bool boundary_is_empty = false;
    std::optional<bool> is_orientable;  // set for connected closed manifolds
    std::optional<SimplicialComplex> boundary;
    std::vector<std::size_t> interior_face_counts;  // by dimension
    std::vector<Vertex> unused_vertices;

    bool has_nonempty_boundary() const { return is_manifold_with_boundary && !boundary_is_empty; }
};

/// Classifies over `field`. When the field is Q and the complex is not a
/// closed manifold over Q, the closed-manifold check is retried over GF(2)
/// and that report is returned if it succeeds.
ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                              ExecPolicy policy = ExecPolicy::parallel);

}  // namespace rstack
