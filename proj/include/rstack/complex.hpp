#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstack {

/// Vertex label in [n] = {1, ..., n}.
using Vertex = int;

/// Faces are stored as 64-bit vertex masks, so the vertex universe is capped.
inline constexpr int kMaxVertices = 64;

/// Raised when an operation is called outside its mathematical precondition.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a combinatorial search would exceed its configured size cap.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite vertex set, bit v-1 standing for vertex v. The empty face has
/// dimension -1.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    /// Builds a face from vertex labels; throws on labels outside [1, n] or
    /// on repeated labels.
    static Face from_vertices(std::span<const Vertex> vertices, int n = kMaxVertices);
    static Face from_vertices(std::initializer_list<Vertex> vertices, int n = kMaxVertices) {
        return from_vertices(std::span<const Vertex>(vertices.begin(), vertices.size()), n);
    }
    static constexpr Face single(Vertex v) { return Face(std::uint64_t{1} << (v - 1)); }
    /// The face {1, ..., n}.
    static constexpr Face range(int n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
    constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    constexpr Face with(Vertex v) const { return Face(bits_ | (std::uint64_t{1} << (v - 1))); }
    constexpr Face without(Vertex v) const { return Face(bits_ & ~(std::uint64_t{1} << (v - 1))); }
    constexpr Face unite(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face intersect(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

    /// Smallest / largest vertex; 0 for the empty face.
    constexpr Vertex min_vertex() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    constexpr Vertex max_vertex() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

    std::vector<Vertex> vertices() const;

    /// Calls fn(v) for each vertex in increasing order.
    template <typename Fn>
    void for_each_vertex(Fn&& fn) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b) + 1);
    }

    std::string to_string() const;

    friend constexpr bool operator==(Face, Face) = default;

    /// Canonical order: by cardinality, then lexicographically on the
    /// ascending vertex lists.
    friend std::strong_ordering operator<=>(Face a, Face b);

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending vertex lists ({1,2} < {1,2,3} < {1,3}).
bool lex_less(Face a, Face b);

/// Calls fn(S) for every subset S of `face` with exactly k elements.
template <typename Fn>
void for_each_subset_of_size(Face face, int k, Fn&& fn) {
    const int m = face.size();
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(Face{});
        return;
    }
    Vertex verts[kMaxVertices];
    int i = 0;
    face.for_each_vertex([&](Vertex v) { verts[i++] = v; });
    if (k == m) {
        fn(face);
        return;
    }
    // Gosper's hack over index masks, stopping at the top combination.
    std::uint64_t sel = (std::uint64_t{1} << k) - 1;
    const std::uint64_t last = sel << (m - k);
    while (true) {
        std::uint64_t bits = 0;
        for (std::uint64_t s = sel; s != 0; s &= s - 1) bits |= std::uint64_t{1} << (verts[std::countr_zero(s)] - 1);
        fn(Face(bits));
        if (sel == last) break;
        const std::uint64_t c = sel & (~sel + 1);
        const std::uint64_t r = sel + c;
        sel = (((r ^ sel) >> 2) / c) | r;
    }
}

/// Calls fn(S) for every subset S of `face` (including the empty set and face).
template <typename Fn>
void for_each_subset(Face face, Fn&& fn) {
    const std::uint64_t full = face.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(Face(s));
        if (s == full) break;
        s = (s - full) & full;
    }
}

/// Bounds for the exponential searches (Δ(r) construction).
struct SearchLimits {
    std::size_t max_candidates = 2'000'000;

    /// Reads RSTACK_SEARCH_CAP from the environment when set.
    static SearchLimits from_environment();
};

/// Immutable simplicial complex on the vertex universe [n], stored by its
/// facets in canonical order. The void complex (no faces) and the empty
/// complex {∅} are distinct values.
///
/// Per-dimension face lists are built on first use and shared between
/// copies; the cache is internally synchronized.
class SimplicialComplex {
public:
    /// Reduces the list to its inclusion-maximal sets. Throws on an empty
    /// list (use void_complex), out-of-range vertices, duplicate vertices
    /// inside a facet, or n outside [0, kMaxVertices].
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<Vertex>>& facets);

    /// Builds the complex generated by an arbitrary list of faces. An empty
    /// list gives the void complex.
    static SimplicialComplex from_faces(int n, std::vector<Face> faces);

    static SimplicialComplex void_complex(int n);
    /// The complex {∅}.
    static SimplicialComplex empty_complex(int n);

    int universe() const { return n_; }
    /// Maximum facet dimension; -1 for both {∅} and the void complex.
    int dim() const { return dim_; }
    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }

    const std::vector<Face>& facets() const { return facets_; }

    /// All k-faces in canonical order; empty for k outside [-1, dim].
    const std::vector<Face>& faces(int k) const;
    std::size_t num_faces(int k) const { return faces(k).size(); }
    /// All faces (including ∅ when non-void), by dimension.
    std::vector<Face> all_faces() const;

    bool contains(Face f) const;
    /// Union of all facets.
    Face vertex_set() const;
    /// Labels of [n] that lie in no facet.
    std::vector<Vertex> unused_vertices() const;

    /// Same universe and same face set.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(int n, std::vector<Face> maximal_faces);

    struct FaceCache;

    int n_ = 0;
    int dim_ = -1;
    std::vector<Face> facets_;
    std::shared_ptr<FaceCache> cache_;
};

/// lk_Δ(F) on the same universe; lk(∅) = Δ. Throws if F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, Face face);
/// st_Δ(v) = v * lk_Δ(v). Throws if v is not a vertex of Δ.
SimplicialComplex star(const SimplicialComplex& complex, Vertex v);
/// v * Γ. The result universe is max(n, v). Throws if v is a vertex of Γ.
SimplicialComplex cone(Vertex v, const SimplicialComplex& base);
/// Δ * Γ; facets are pairwise unions. Throws if the vertex sets meet.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// All faces of dimension <= r.
SimplicialComplex skeleton(const SimplicialComplex& complex, int r);

/// Δ(r): every vertex set whose subsets of cardinality <= r+1 all lie in Δ.
/// Enumerated as maximal sets of the hereditary family by a
/// Bron–Kerbosch-style search; throws SizeGuardError past the cap.
SimplicialComplex delta_r(const SimplicialComplex& complex, int r,
                          const SearchLimits& limits = SearchLimits::from_environment());

/// Minimal non-faces over the whole universe [n], in canonical order.
std::vector<Face> missing_faces(const SimplicialComplex& complex);

/// Face-set union. Throws on universe mismatch.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Face-set equality. Throws on universe mismatch.
bool equals(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace rstack

template <>
struct std::hash<rstack::Face> {
    std::size_t operator()(rstack::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
