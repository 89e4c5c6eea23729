#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rstack/complex.hpp"

namespace rstack {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
public:
    enum class Kind { rationals, prime };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
    /// Throws unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// Accepts "rat", "gf2" or "gf:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Whether independent pieces of work may be spread over OpenMP threads.
/// The serial path is the reference the parallel one is tested against.
enum class ExecPolicy { serial, parallel };

/// Sparse column-major ∂_k with rows indexed by (k-1)-faces and columns by
/// k-faces, both in canonical face order. Entry for column F and row F∖{v_i}
/// is (-1)^i where v_0 < ... < v_k are the vertices of F. ∂_0 is the
/// augmentation map onto the single (-1)-face.
struct BoundaryMatrix {
    int k = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;  // (row, ±1), rows ascending
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Exact rank over the field. Over Q the elimination is fraction-free on
/// GMP integers; over GF(p) it is modular.
std::size_t matrix_rank(const BoundaryMatrix& m, const FieldSpec& field);

/// Reduced Betti numbers β_0..β_dim over a field. The complex {∅} has no
/// entries and carries β_{-1} = 1 in `empty_face_class`.
struct BettiVector {
    std::vector<std::int64_t> values;
    FieldSpec field = FieldSpec::rationals();
    bool empty_face_class = false;

    /// β_i for any i >= -1, zero outside the stored range.
    std::int64_t at(int i) const {
        if (i == -1) return empty_face_class ? 1 : 0;
        if (i < 0 || static_cast<std::size_t>(i) >= values.size()) return 0;
        return values[static_cast<std::size_t>(i)];
    }
};

/// Throws PreconditionError on the void complex.
BettiVector betti_numbers(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                          ExecPolicy policy = ExecPolicy::parallel);

/// χ̃ = Σ_{k=-1}^{dim} (-1)^k f_k.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace rstack
