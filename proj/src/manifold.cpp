#include "rstack/manifold.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rstack {

namespace {

int top_index(int dim, Face f) { return dim - f.size(); }

int highest_index(const BettiVector& b) { return static_cast<int>(b.values.size()) - 1; }

bool has_sphere_profile(const BettiVector& b, int top) {
    for (int i = -1; i <= std::max(top, highest_index(b)); ++i)
        if (b.at(i) != (i == top ? 1 : 0)) return false;
    return true;
}

bool zero_off_top(const BettiVector& b, int top) {
    for (int i = -1; i <= highest_index(b); ++i)
        if (i != top && b.at(i) != 0) return false;
    return true;
}

void require_pure(const SimplicialComplex& complex, const char* what) {
    if (!is_pure(complex)) throw PreconditionError(std::string(what) + ": complex is not pure");
}

struct BoundaryAttempt {
    std::optional<SimplicialComplex> boundary;
    std::string failure;
};

BoundaryAttempt boundary_from_scan(const SimplicialComplex& complex, const LinkScan& scan) {
    if (!scan.condition_i) return {std::nullopt, "some face link has homology off its top degree or top Betti > 1"};
    std::vector<Face> faces;
    for (std::size_t i = 0; i < scan.faces.size(); ++i) {
        const Face f = scan.faces[i];
        if (!f.empty() && scan.links[i].at(top_index(scan.dim, f)) == 0) faces.push_back(f);
    }
    if (faces.empty()) return {SimplicialComplex::empty_complex(complex.universe()), {}};
    const std::size_t count = faces.size();
    auto boundary = SimplicialComplex::from_faces(complex.universe(), std::move(faces));
    std::size_t closure = 0;
    for (int k = 0; k <= boundary.dim(); ++k) closure += boundary.num_faces(k);
    if (closure != count) return {std::nullopt, "boundary faces are not closed under taking subsets"};
    for (Face f : boundary.facets())
        if (f.dim() != scan.dim - 1) return {std::nullopt, "boundary is not pure of dimension dim - 1"};
    return {std::move(boundary), {}};
}

bool closed_from_scan(const LinkScan& scan) { return scan.nonempty_links_are_spheres; }

}  // namespace

std::vector<BettiVector> link_betti_profiles(const SimplicialComplex& complex, std::span<const Face> faces,
                                             const FieldSpec& field, ExecPolicy policy) {
    std::vector<BettiVector> out(faces.size());
    const auto count = static_cast<std::ptrdiff_t>(faces.size());
    if (policy == ExecPolicy::parallel) {
#ifdef RSTACK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (std::ptrdiff_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] =
                betti_numbers(link(complex, faces[static_cast<std::size_t>(i)]), field, ExecPolicy::serial);
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] =
                betti_numbers(link(complex, faces[static_cast<std::size_t>(i)]), field, ExecPolicy::serial);
    }
    return out;
}

LinkScan scan_links(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    if (complex.is_void()) throw PreconditionError("scan_links: void complex");
    LinkScan scan;
    scan.dim = complex.dim();
    scan.faces = complex.all_faces();
    scan.links = link_betti_profiles(complex, scan.faces, field, policy);
    scan.nonempty_links_are_spheres = true;
    scan.condition_i = true;
    scan.nonempty_links_cohen_macaulay = true;
    for (std::size_t i = 0; i < scan.faces.size(); ++i) {
        const Face f = scan.faces[i];
        const BettiVector& b = scan.links[i];
        const int top = top_index(scan.dim, f);
        const bool zero_off = zero_off_top(b, top);
        if (f.empty()) {
            scan.empty_link_is_sphere = has_sphere_profile(b, top);
            scan.cohen_macaulay = zero_off;
            continue;
        }
        scan.nonempty_links_are_spheres = scan.nonempty_links_are_spheres && has_sphere_profile(b, top);
        scan.condition_i = scan.condition_i && zero_off && b.at(top) <= 1;
        scan.nonempty_links_cohen_macaulay = scan.nonempty_links_cohen_macaulay && zero_off;
    }
    scan.cohen_macaulay = scan.cohen_macaulay && scan.nonempty_links_cohen_macaulay;
    return scan;
}

bool is_pure(const SimplicialComplex& complex) {
    if (complex.is_void()) throw PreconditionError("is_pure: void complex");
    const int d = complex.dim();
    return std::all_of(complex.facets().begin(), complex.facets().end(), [d](Face f) { return f.dim() == d; });
}

bool is_connected(const SimplicialComplex& complex) {
    if (complex.is_void()) throw PreconditionError("is_connected: void complex");
    const Face vertices = complex.vertex_set();
    if (vertices.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(complex.universe() + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (Face f : complex.facets()) {
        const Vertex root = f.min_vertex();
        f.for_each_vertex([&](Vertex v) { parent[static_cast<std::size_t>(find(v))] = find(root); });
    }
    const int root = find(vertices.min_vertex());
    bool connected = true;
    vertices.for_each_vertex([&](Vertex v) { connected = connected && find(v) == root; });
    return connected;
}

bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    require_pure(complex, "is_homology_sphere");
    const LinkScan scan = scan_links(complex, field, policy);
    return scan.empty_link_is_sphere && scan.nonempty_links_are_spheres;
}

bool is_closed_manifold(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    require_pure(complex, "is_closed_manifold");
    return closed_from_scan(scan_links(complex, field, policy));
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    require_pure(complex, "boundary_complex");
    BoundaryAttempt attempt = boundary_from_scan(complex, scan_links(complex, field, policy));
    if (!attempt.boundary) throw PreconditionError("boundary_complex: " + attempt.failure);
    return std::move(*attempt.boundary);
}

bool is_manifold_with_boundary(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    require_pure(complex, "is_manifold_with_boundary");
    const BoundaryAttempt attempt = boundary_from_scan(complex, scan_links(complex, field, policy));
    return attempt.boundary && is_closed_manifold(*attempt.boundary, field, policy);
}

std::vector<std::vector<Face>> interior_faces(const SimplicialComplex& complex, const FieldSpec& field,
                                              ExecPolicy policy) {
    const SimplicialComplex boundary = boundary_complex(complex, field, policy);
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(std::max(complex.dim() + 1, 0)));
    for (int k = 0; k <= complex.dim(); ++k)
        for (Face f : complex.faces(k))
            if (!boundary.contains(f)) out[static_cast<std::size_t>(k)].push_back(f);
    return out;
}

bool is_homology_ball(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    require_pure(complex, "is_homology_ball");
    const LinkScan scan = scan_links(complex, field, policy);
    const BoundaryAttempt attempt = boundary_from_scan(complex, scan);
    if (!attempt.boundary) return false;
    const BettiVector& betti = scan.links.front();  // lk(∅) = Δ
    for (int i = -1; i <= highest_index(betti); ++i)
        if (betti.at(i) != 0) return false;
    return is_homology_sphere(*attempt.boundary, field, policy);
}

bool is_orientable(const SimplicialComplex& complex) {
    if (!is_pure(complex) || !is_connected(complex) ||
        !(is_closed_manifold(complex, FieldSpec::rationals()) || is_closed_manifold(complex, FieldSpec::prime(2))))
        throw PreconditionError("is_orientable: needs a connected closed homology manifold");
    return betti_numbers(complex, FieldSpec::rationals()).at(complex.dim()) == 1;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    return scan_links(complex, field, policy).cohen_macaulay;
}

bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    if (!is_pure(complex)) return false;
    return scan_links(complex, field, policy).nonempty_links_cohen_macaulay;
}

namespace {

ClassificationReport classify_over(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    ClassificationReport report;
    report.field = field;
    report.is_pure = is_pure(complex);
    report.is_connected = is_connected(complex);
    report.unused_vertices = complex.unused_vertices();
    const LinkScan scan = scan_links(complex, field, policy);
    report.is_cohen_macaulay = scan.cohen_macaulay;
    if (!report.is_pure) return report;

    report.is_buchsbaum = scan.nonempty_links_cohen_macaulay;
    report.is_closed_manifold = closed_from_scan(scan);
    report.is_homology_sphere = report.is_closed_manifold && scan.empty_link_is_sphere;

    BoundaryAttempt attempt = boundary_from_scan(complex, scan);
    if (attempt.boundary && is_closed_manifold(*attempt.boundary, field, policy)) {
        report.is_manifold_with_boundary = true;
        report.boundary_is_empty = attempt.boundary->is_empty_complex();
        report.interior_face_counts.assign(static_cast<std::size_t>(complex.dim() + 1), 0);
        for (int k = 0; k <= complex.dim(); ++k)
            for (Face f : complex.faces(k))
                if (!attempt.boundary->contains(f)) ++report.interior_face_counts[static_cast<std::size_t>(k)];
        const BettiVector& betti = scan.links.front();
        bool acyclic = true;
        for (int i = -1; i <= highest_index(betti); ++i) acyclic = acyclic && betti.at(i) == 0;
        report.is_homology_ball = acyclic && is_homology_sphere(*attempt.boundary, field, policy);
        report.boundary = std::move(attempt.boundary);
    }
    if (report.is_closed_manifold && report.is_connected) {
        const BettiVector rational =
            field.is_rationals() ? scan.links.front() : betti_numbers(complex, FieldSpec::rationals(), policy);
        report.is_orientable = rational.at(complex.dim()) == 1;
    }
    return report;
}

}  // namespace

ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    ClassificationReport report = classify_over(complex, field, policy);
    if (field.is_rationals() && report.is_pure && !report.is_closed_manifold) {
        ClassificationReport mod2 = classify_over(complex, FieldSpec::prime(2), policy);
        if (mod2.is_closed_manifold) return mod2;
    }
    return report;
}

}  // namespace rstack
