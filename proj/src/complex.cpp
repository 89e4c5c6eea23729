#include "rstack/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace rstack {

namespace {

void check_universe(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex universe size " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
}

// Keeps only inclusion-maximal faces, deduplicated, in canonical order.
std::vector<Face> maximal_elements(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.bits() < b.bits();
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.is_subset_of(g); });
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

// ---------------------------------------------------------------------------
// Face

Face Face::from_vertices(std::span<const Vertex> vertices, int n) {
    std::uint64_t bits = 0;
    for (Vertex v : vertices) {
        if (v < 1 || v > n || v > kMaxVertices)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        const std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (bits & bit) throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in one face");
        bits |= bit;
    }
    return Face(bits);
}

std::vector<Vertex> Face::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_vertex([&](Vertex v) { out.push_back(v); });
    return out;
}

std::string Face::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_vertex([&](Vertex v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

bool lex_less(Face a, Face b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int pos = std::countr_zero(diff);
    // The first differing element is pos+1; whichever list holds it is
    // smaller unless the other list has run out.
    const std::uint64_t above = pos == 63 ? 0 : ~((std::uint64_t{2} << pos) - 1);
    if (a.bits() >> pos & 1U) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

std::strong_ordering operator<=>(Face a, Face b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    if (a == b) return std::strong_ordering::equal;
    return lex_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// SearchLimits

SearchLimits SearchLimits::from_environment() {
    SearchLimits limits;
    if (const char* env = std::getenv("RSTACK_SEARCH_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) limits.max_candidates = static_cast<std::size_t>(value);
    }
    return limits;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

struct SimplicialComplex::FaceCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<const std::vector<Face>>> by_dim;  // index k+1
};

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> maximal_faces)
    : n_(n), facets_(std::move(maximal_faces)), cache_(std::make_shared<FaceCache>()) {
    for (Face f : facets_) dim_ = std::max(dim_, f.dim());
    cache_->by_dim.resize(static_cast<std::size_t>(dim_ + 2));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<Vertex>>& facets) {
    check_universe(n);
    if (facets.empty()) throw std::invalid_argument("facet list is empty; use void_complex for the void complex");
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& verts : facets) faces.push_back(Face::from_vertices(verts, n));
    return SimplicialComplex(n, maximal_elements(std::move(faces)));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
    check_universe(n);
    const Face universe = Face::range(n);
    for (Face f : faces)
        if (!f.is_subset_of(universe)) throw std::invalid_argument("face " + f.to_string() + " outside [n]");
    return SimplicialComplex(n, maximal_elements(std::move(faces)));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_universe(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    check_universe(n);
    return SimplicialComplex(n, {Face{}});
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
    static const std::vector<Face> kNone;
    if (k < -1 || k > dim_ || is_void()) return kNone;
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->by_dim[static_cast<std::size_t>(k + 1)];
    if (!slot) {
        std::unordered_set<Face> seen;
        for (Face f : facets_) for_each_subset_of_size(f, k + 1, [&](Face s) { seen.insert(s); });
        std::vector<Face> list(seen.begin(), seen.end());
        std::sort(list.begin(), list.end());
        slot = std::make_unique<const std::vector<Face>>(std::move(list));
    }
    return *slot;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    for (int k = -1; k <= dim_; ++k) {
        const auto& fk = faces(k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

bool SimplicialComplex::contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
}

Face SimplicialComplex::vertex_set() const {
    Face v;
    for (Face f : facets_) v = v.unite(f);
    return v;
}

std::vector<Vertex> SimplicialComplex::unused_vertices() const {
    return Face::range(n_).minus(vertex_set()).vertices();
}

// ---------------------------------------------------------------------------
// Operations

SimplicialComplex link(const SimplicialComplex& complex, Face face) {
    if (!complex.contains(face)) throw PreconditionError("link: " + face.to_string() + " is not a face");
    std::vector<Face> out;
    for (Face f : complex.facets())
        if (face.is_subset_of(f)) out.push_back(f.minus(face));
    return SimplicialComplex::from_faces(complex.universe(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& complex, Vertex v) {
    if (v < 1 || v > complex.universe() || !complex.vertex_set().contains(v))
        throw PreconditionError("star: " + std::to_string(v) + " is not a vertex");
    std::vector<Face> out;
    for (Face f : complex.facets())
        if (f.contains(v)) out.push_back(f);
    return SimplicialComplex::from_faces(complex.universe(), std::move(out));
}

SimplicialComplex cone(Vertex v, const SimplicialComplex& base) {
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("cone vertex out of range");
    if (v <= base.universe() && base.vertex_set().contains(v))
        throw PreconditionError("cone: apex " + std::to_string(v) + " is already a vertex");
    const int n = std::max(base.universe(), v);
    std::vector<Face> out;
    for (Face f : base.facets()) out.push_back(f.with(v));
    return SimplicialComplex::from_faces(n, std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_set().intersects(b.vertex_set())) throw PreconditionError("join: vertex sets overlap");
    const int n = std::max(a.universe(), b.universe());
    std::vector<Face> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (Face f : a.facets())
        for (Face g : b.facets()) out.push_back(f.unite(g));
    return SimplicialComplex::from_faces(n, std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int r) {
    if (r < -1) throw std::invalid_argument("skeleton: r < -1");
    if (complex.is_void()) return complex;
    std::vector<Face> out;
    for (Face f : complex.facets()) {
        if (f.dim() <= r)
            out.push_back(f);
        else
            for_each_subset_of_size(f, r + 1, [&](Face s) { out.push_back(s); });
    }
    return SimplicialComplex::from_faces(complex.universe(), std::move(out));
}

namespace {

// Backtracking enumeration of maximal members of Δ(r). `current` is always
// a member; `candidates` are the vertices that extend it and have not been
// branched on yet, `excluded` those that extend it but were branched on
// already. A leaf with both empty is maximal.
class DeltaSearch {
public:
    DeltaSearch(const SimplicialComplex& complex, int r, const SearchLimits& limits)
        : r_(r), limits_(limits) {
        for (int k = -1; k <= std::min(r, complex.dim()); ++k)
            for (Face f : complex.faces(k)) allowed_.insert(f);
    }

    std::vector<Face> run(Face vertices) {
        // Singletons are members exactly when they are vertices of Δ.
        search(Face{}, vertices, Face{});
        return std::move(found_);
    }

private:
    // current ∪ {v} and current ∪ {w} are members; decides current ∪ {v, w}
    // by testing the subsets that contain both v and w.
    bool extends(Face current, Vertex v, Vertex w) const {
        const Face pair = Face::single(v).with(w);
        if (r_ < 1) return true;
        bool ok = true;
        for (int s = 0; s <= std::min(r_ - 1, current.size()) && ok; ++s)
            for_each_subset_of_size(current, s, [&](Face sub) {
                if (ok && !allowed_.contains(sub.unite(pair))) ok = false;
            });
        return ok;
    }

    void search(Face current, Face candidates, Face excluded) {
        if (++visited_ > limits_.max_candidates)
            throw SizeGuardError("delta_r: search exceeded " + std::to_string(limits_.max_candidates) +
                                 " candidate sets (raise RSTACK_SEARCH_CAP to allow more)");
        if (candidates.empty()) {
            if (excluded.empty()) found_.push_back(current);
            return;
        }
        Face remaining = candidates;
        while (!remaining.empty()) {
            const Vertex v = remaining.min_vertex();
            const Face next = current.with(v);
            Face next_candidates, next_excluded;
            remaining.without(v).for_each_vertex([&](Vertex w) {
                if (extends(current, v, w)) next_candidates = next_candidates.with(w);
            });
            excluded.for_each_vertex([&](Vertex w) {
                if (extends(current, v, w)) next_excluded = next_excluded.with(w);
            });
            search(next, next_candidates, next_excluded);
            remaining = remaining.without(v);
            excluded = excluded.with(v);
        }
    }

    int r_;
    const SearchLimits& limits_;
    std::unordered_set<Face> allowed_;
    std::vector<Face> found_;
    std::size_t visited_ = 0;
};

}  // namespace

SimplicialComplex delta_r(const SimplicialComplex& complex, int r, const SearchLimits& limits) {
    if (r < 0) throw std::invalid_argument("delta_r: r must be non-negative");
    if (complex.is_void()) return complex;
    DeltaSearch search(complex, r, limits);
    return SimplicialComplex::from_faces(complex.universe(), search.run(complex.vertex_set()));
}

std::vector<Face> missing_faces(const SimplicialComplex& complex) {
    const Face universe = Face::range(complex.universe());
    if (complex.is_void()) return {Face{}};
    std::unordered_set<Face> faces;
    for (Face f : complex.all_faces()) faces.insert(f);
    std::unordered_set<Face> found;
    for (Face g : faces) {
        universe.minus(g).for_each_vertex([&](Vertex v) {
            const Face s = g.with(v);
            if (faces.contains(s) || found.contains(s)) return;
            bool minimal = true;
            s.for_each_vertex([&](Vertex u) {
                if (minimal && !faces.contains(s.without(u))) minimal = false;
            });
            if (minimal) found.insert(s);
        });
    }
    std::vector<Face> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.universe() != b.universe()) throw std::invalid_argument("union: vertex universes differ");
    std::vector<Face> all = a.facets();
    all.insert(all.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_faces(a.universe(), std::move(all));
}

bool equals(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.universe() != b.universe()) throw std::invalid_argument("equals: vertex universes differ");
    return a.facets() == b.facets();
}

}  // namespace rstack
