#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rstack/complex.hpp"
#include "rstack/homology.hpp"

namespace rstack {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// C(n, k), zero when k < 0, k > n or n < 0.
Integer binomial(long n, long k);

/// (f_{-1}, f_0, ..., f_{d-1}) with d = dim + 1. Throws on the void complex.
IntVector f_vector(const SimplicialComplex& complex);

/// Coefficients of Σ_i f_{i-1} t^i (1-t)^{d-i}. Requires f.size() == d+1.
IntVector h_from_f(const IntVector& f, int d);
/// Inverse transform: Σ_i f_{i-1} t^i = Σ_i h_i t^i (t+1)^{d-i}.
IntVector f_from_h(const IntVector& h, int d);

/// h'_i = h_i - C(d,i) Σ_{k=1}^{i-1} (-1)^{i-k} β_{k-1}, i = 0..d.
/// Throws std::invalid_argument when h'_d != β_{d-1}, which only happens if
/// h and the Betti numbers come from different complexes.
IntVector h_prime(const IntVector& h, const BettiVector& betti, int d);
/// h''_i = h'_i - C(d,i) β_{i-1} for i < d, h''_d = h'_d.
IntVector h_double_prime(const IntVector& h, const BettiVector& betti, int d);

/// g_0 = h_0, g_i = h_i - h_{i-1}.
IntVector g_vector(const IntVector& h);

/// g̃_r = h_r - h_{r-1} - C(d+1, r) Σ_{j=1}^{r} (-1)^{r-j} β_{j-1} for
/// r = 1..⌊d/2⌋, g̃_0 = 1, where d = dim + 1.
IntVector g_tilde(const IntVector& h, const BettiVector& betti, int d);
IntVector g_tilde(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals());

/// Every face-number statistic of one complex over one field.
struct VectorSuite {
    int d = 0;  // dim + 1
    IntVector f, h, h_prime, h_double_prime, g, g_tilde;
    BettiVector betti;
    FieldSpec field = FieldSpec::rationals();
};

VectorSuite compute_vectors(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                            ExecPolicy policy = ExecPolicy::parallel);

/// Per-index residuals (i = 0..d) of the two Dehn–Sommerville forms for a
/// homology manifold with boundary:
///   g_i(∂Δ) = h_i - h_{d-i} + C(d,i) (-1)^{d-1-i} χ̃(Δ)
///   g_i(∂Δ) = h_i - h''_{d-i} + C(d,i) Σ_{k=d-i}^{d-1} (-1)^{d-1-i-k} β_k
struct DehnSommervilleResidual {
    IntVector euler_form;
    IntVector betti_form;
    bool all_zero() const;
};

/// Requires a homology manifold with nonempty boundary.
DehnSommervilleResidual dehn_sommerville_residual(const SimplicialComplex& complex,
                                                  const FieldSpec& field = FieldSpec::rationals(),
                                                  ExecPolicy policy = ExecPolicy::parallel);

struct MVectorVerdict {
    bool is_m_vector = false;
    std::optional<std::size_t> first_violation_index;
};

/// Macaulay's upper bound a^{<i>} for i >= 1 and a >= 0.
Integer macaulay_bound(const Integer& a, int i);

/// v_0 = 1, all entries non-negative, and v_{i+1} <= v_i^{<i>} for i >= 1.
MVectorVerdict is_m_vector(const IntVector& v);

struct IdentityCheck {
    bool holds = false;
    IntVector residual;
};

/// For a connected closed orientable manifold of dimension d-1:
///   h''_i = h''_{d-i}                    residual indexed i = 0..d
///   g̃_i = h''_{d-i} - h'_{d-i+1}         residual indexed i = 1..⌊d/2⌋
///   β_{d-i} = β_{i-1}                    residual indexed i = 2..d-1
/// (reduced Betti numbers; the end cases i = 1, d differ by the reduction).
struct DualityReport {
    IdentityCheck h_double_prime_symmetry;
    IdentityCheck g_tilde_formula;
    IdentityCheck poincare_duality;
    bool all_hold() const {
        return h_double_prime_symmetry.holds && g_tilde_formula.holds && poincare_duality.holds;
    }
};

/// Requires a pure connected closed manifold whose top Betti number over
/// `field` is 1 (automatic over GF(2)).
DualityReport symmetry_and_duality_checks(const SimplicialComplex& complex,
                                          const FieldSpec& field = FieldSpec::rationals(),
                                          ExecPolicy policy = ExecPolicy::parallel);

/// Reports min_{r>=1} g̃_r and the first negative index, if any.
struct GlbcProbe {
    std::optional<Integer> min_value;
    std::optional<std::size_t> first_negative_index;
};
GlbcProbe glbc_probe(const IntVector& g_tilde);

}  // namespace rstack
