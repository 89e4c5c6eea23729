#include "rstack/stackedness.hpp"

#include <sstream>

#include "rstack/enumerative.hpp"
#include "rstack/manifold.hpp"

namespace rstack {

namespace {

// ∂Δ of a homology manifold with nonempty boundary, or PreconditionError.
SimplicialComplex nonempty_boundary(const SimplicialComplex& complex, const FieldSpec& field, const char* what) {
    if (complex.is_void() || !is_pure(complex) || !is_manifold_with_boundary(complex, field))
        throw PreconditionError(std::string(what) + ": not a homology manifold with boundary over " + field.name());
    SimplicialComplex boundary = boundary_complex(complex, field);
    if (boundary.is_empty_complex())
        throw PreconditionError(std::string(what) + ": the boundary is empty; use the closed-manifold criteria");
    return boundary;
}

void require_closed(const SimplicialComplex& complex, const FieldSpec& field, const char* what) {
    if (complex.is_void() || !is_pure(complex) || !is_closed_manifold(complex, field))
        throw PreconditionError(std::string(what) + ": not a closed homology manifold over " + field.name());
}

// Lowest-dimensional face of `complex` of dimension <= max_dim that is not in
// `boundary`, if any.
std::optional<Face> low_interior_face(const SimplicialComplex& complex, const SimplicialComplex& boundary,
                                      int max_dim) {
    for (int k = 0; k <= std::min(max_dim, complex.dim()); ++k)
        for (Face f : complex.faces(k))
            if (!boundary.contains(f)) return f;
    return std::nullopt;
}

// Checks that `candidate` is a homology manifold of dimension d with
// boundary `expected` and no interior faces of dimension <= d - r. Appends
// the reason for the first failure to `notes`.
bool bounds_stacked_manifold(const SimplicialComplex& candidate, const SimplicialComplex& expected, int d, int r,
                             const FieldSpec& field, bool require_ball, std::vector<std::string>& notes) {
    if (candidate.dim() != d || !is_pure(candidate)) {
        notes.push_back("candidate is not pure of dimension " + std::to_string(d));
        return false;
    }
    if (!is_manifold_with_boundary(candidate, field)) {
        notes.push_back("candidate is not a homology manifold with boundary");
        return false;
    }
    if (require_ball && !is_homology_ball(candidate, field)) {
        notes.push_back("candidate is not a homology ball");
        return false;
    }
    const SimplicialComplex boundary = boundary_complex(candidate, field);
    if (!equals(boundary, expected)) {
        notes.push_back("candidate boundary differs from the input complex");
        return false;
    }
    if (auto f = low_interior_face(candidate, boundary, d - r)) {
        notes.push_back("candidate has interior face " + f->to_string() + " of dimension " + std::to_string(f->dim()));
        return false;
    }
    return true;
}

StackednessVerdict make_verdict(int r, Criterion criterion) {
    StackednessVerdict v;
    v.r = r;
    v.stack_level = r - 1;
    v.criterion = criterion;
    return v;
}

}  // namespace

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::interior_faces: return "interior-faces";
        case Criterion::h_double_prime: return "h-double-prime";
        case Criterion::delta_reconstruction: return "delta-reconstruction";
        case Criterion::local: return "local";
    }
    return "?";
}

StackednessVerdict is_stacked_with_boundary(const SimplicialComplex& complex, int level, const FieldSpec& field) {
    if (level < 0) throw std::invalid_argument("is_stacked_with_boundary: level must be non-negative");
    const SimplicialComplex boundary = nonempty_boundary(complex, field, "is_stacked_with_boundary");
    StackednessVerdict v = make_verdict(level + 1, Criterion::interior_faces);
    const auto f = low_interior_face(complex, boundary, complex.dim() - level - 1);
    v.verdict = !f.has_value();
    if (f) v.notes.push_back("interior face " + f->to_string() + " of dimension " + std::to_string(f->dim()));
    return v;
}

StackednessVerdict is_stacked_via_h(const SimplicialComplex& complex, int r, const FieldSpec& field) {
    (void)nonempty_boundary(complex, field, "is_stacked_via_h");
    const int d = complex.dim() + 1;
    if (r < 1 || r > d) throw PreconditionError("is_stacked_via_h: r must lie in [1, " + std::to_string(d) + "]");
    const VectorSuite s = compute_vectors(complex, field);
    StackednessVerdict v = make_verdict(r, Criterion::h_double_prime);
    v.verdict = s.h_double_prime[static_cast<std::size_t>(r)] == 0;
    v.notes.push_back("h''_" + std::to_string(r) + " = " + s.h_double_prime[static_cast<std::size_t>(r)].get_str());
    return v;
}

StackednessVerdict is_stacked_closed(const SimplicialComplex& complex, int r, const FieldSpec& field,
                                     const SearchLimits& limits) {
    require_closed(complex, field, "is_stacked_closed");
    if (r < 1) throw std::invalid_argument("is_stacked_closed: r must be >= 1");
    const int d = complex.dim() + 1;
    StackednessVerdict v = make_verdict(r, Criterion::delta_reconstruction);
    if (2 * r > d) v.notes.push_back("sufficient-only: r > d/2, a failed candidate does not rule out stackedness");
    SimplicialComplex sigma = delta_r(complex, r, limits);
    if (equals(sigma, complex)) {
        v.notes.push_back("Delta(r) equals the input complex");
        return v;
    }
    v.verdict = bounds_stacked_manifold(sigma, complex, d, r, field, false, v.notes);
    if (v.verdict) v.witness = std::move(sigma);
    return v;
}

StackednessVerdict is_stacked_sphere(const SimplicialComplex& complex, int r, const FieldSpec& field,
                                     const SearchLimits& limits) {
    if (complex.is_void() || !is_pure(complex) || !is_homology_sphere(complex, field))
        throw PreconditionError("is_stacked_sphere: not a homology sphere over " + field.name());
    const int d = complex.dim() + 1;
    if (r < 1 || 2 * r > d + 1)
        throw PreconditionError("is_stacked_sphere: r = " + std::to_string(r) + " outside [1, (d+1)/2] for d = " +
                                std::to_string(d));
    StackednessVerdict v = make_verdict(r, Criterion::delta_reconstruction);
    SimplicialComplex ball = delta_r(complex, r - 1, limits);
    v.verdict = bounds_stacked_manifold(ball, complex, d, r, field, true, v.notes);
    if (v.verdict) v.witness = std::move(ball);
    return v;
}

StackednessVerdict is_locally_stacked(const SimplicialComplex& complex, int r, const FieldSpec& field,
                                      const SearchLimits& limits) {
    require_closed(complex, field, "is_locally_stacked");
    StackednessVerdict v = make_verdict(r, Criterion::local);
    v.verdict = true;
    complex.vertex_set().for_each_vertex([&](Vertex u) {
        if (!v.verdict) return;
        const StackednessVerdict local = is_stacked_sphere(link(complex, Face::single(u)), r, field, limits);
        if (!local.verdict) {
            v.verdict = false;
            v.notes.push_back("link of vertex " + std::to_string(u) + " is not " + std::to_string(r - 1) + "-stacked");
        }
    });
    return v;
}

StackednessVerdict local_to_global(const SimplicialComplex& complex, int r, const FieldSpec& field,
                                   const SearchLimits& limits) {
    require_closed(complex, field, "local_to_global");
    const int d = complex.dim() + 1;
    StackednessVerdict v = make_verdict(r, Criterion::local);
    if (r < 1 || 2 * r >= d) v.notes.push_back("outside theorem range: needs 1 <= r < d/2 (d = " + std::to_string(d) + ")");
    if (!is_locally_stacked(complex, r, field, limits).verdict)
        throw PreconditionError("local_to_global: the complex is not locally " + std::to_string(r - 1) + "-stacked");

    std::vector<std::pair<Vertex, SimplicialComplex>> pieces;
    std::vector<Face> cells;
    complex.vertex_set().for_each_vertex([&](Vertex u) {
        SimplicialComplex piece = delta_r(link(complex, Face::single(u)), r - 1, limits);
        const SimplicialComplex star_piece = cone(u, piece);
        cells.insert(cells.end(), star_piece.facets().begin(), star_piece.facets().end());
        pieces.emplace_back(u, std::move(piece));
    });
    SimplicialComplex sigma = SimplicialComplex::from_faces(complex.universe(), std::move(cells));

    for (const auto& [u, piece] : pieces) {
        if (!equals(link(sigma, Face::single(u)), piece)) {
            v.notes.push_back("link of vertex " + std::to_string(u) + " in Sigma differs from D_v");
            return v;
        }
    }
    v.verdict = bounds_stacked_manifold(sigma, complex, d, r, field, false, v.notes);
    if (v.verdict) v.witness = std::move(sigma);
    return v;
}

std::vector<ConsequenceCheck> stackedness_consequences(const SimplicialComplex& complex, int level,
                                                       const FieldSpec& field, const SearchLimits& limits) {
    if (level < 0) throw std::invalid_argument("stackedness_consequences: level must be non-negative");
    const int r = level + 1;
    const int d = complex.dim() + 1;
    const ClassificationReport report = classify(complex, field);
    const BettiVector betti = betti_numbers(complex, report.field);
    const std::vector<Face> missing = missing_faces(complex);

    int betti_from = 0, betti_to = -1, missing_from = 0, missing_to = -1;
    if (report.has_nonempty_boundary()) {
        if (!is_stacked_with_boundary(complex, level, report.field).verdict)
            throw PreconditionError("stackedness_consequences: not " + std::to_string(level) + "-stacked");
        betti_from = r;
        betti_to = complex.dim();
        missing_from = r + 1;
        missing_to = complex.dim() + 1;
    } else if (report.is_closed_manifold) {
        if (2 * r >= d) throw PreconditionError("stackedness_consequences: closed case needs r < d/2");
        if (!is_stacked_closed(complex, r, report.field, limits).verdict)
            throw PreconditionError("stackedness_consequences: not " + std::to_string(level) + "-stacked");
        betti_from = r;
        betti_to = d - 1 - r;
        missing_from = r + 1;
        missing_to = d - r;
    } else {
        throw PreconditionError("stackedness_consequences: not a homology manifold");
    }

    ConsequenceCheck betti_check{"betti-vanishing", true, {}};
    std::ostringstream bd;
    bd << "beta_k = 0 for " << betti_from << " <= k <= " << betti_to;
    for (int k = betti_from; k <= betti_to; ++k)
        if (betti.at(k) != 0) {
            betti_check.passed = false;
            bd << "; beta_" << k << " = " << betti.at(k);
        }
    betti_check.detail = bd.str();

    ConsequenceCheck missing_check{"missing-face-vanishing", true, {}};
    std::ostringstream md;
    md << "no missing k-faces for " << missing_from << " <= k <= " << missing_to;
    for (Face f : missing)
        if (f.dim() >= missing_from && f.dim() <= missing_to) {
            missing_check.passed = false;
            md << "; found " << f.to_string();
        }
    missing_check.detail = md.str();
    return {betti_check, missing_check};
}

}  // namespace rstack
