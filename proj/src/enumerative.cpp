#include "rstack/enumerative.hpp"

#include <algorithm>
#include <stdexcept>

#include "rstack/manifold.hpp"

namespace rstack {

namespace {

int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

const Integer& at_or_zero(const IntVector& v, long i) {
    static const Integer kZero = 0;
    if (i < 0 || static_cast<std::size_t>(i) >= v.size()) return kZero;
    return v[static_cast<std::size_t>(i)];
}

Integer betti(const BettiVector& b, int i) { return Integer(static_cast<long>(b.at(i))); }

// Σ_{k=1}^{upper} (-1)^{i-k} β_{k-1}
Integer alternating_betti_sum(const BettiVector& b, int i, int upper) {
    Integer sum = 0;
    for (int k = 1; k <= upper; ++k) sum += sign_of(i - k) * betti(b, k - 1);
    return sum;
}

void check_length(const IntVector& v, int d, const char* what) {
    if (d < 0 || v.size() != static_cast<std::size_t>(d + 1))
        throw std::invalid_argument(std::string(what) + ": expected length d+1 = " + std::to_string(d + 1) +
                                    ", got " + std::to_string(v.size()));
}

}  // namespace

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

IntVector f_vector(const SimplicialComplex& complex) {
    if (complex.is_void()) throw PreconditionError("f_vector: void complex");
    IntVector f;
    for (int k = -1; k <= complex.dim(); ++k) f.emplace_back(static_cast<unsigned long>(complex.num_faces(k)));
    return f;
}

IntVector h_from_f(const IntVector& f, int d) {
    check_length(f, d, "h_from_f");
    IntVector h(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) h[k] += sign_of(k - i) * binomial(d - i, k - i) * f[i];
    return h;
}

IntVector f_from_h(const IntVector& h, int d) {
    check_length(h, d, "f_from_h");
    IntVector f(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) f[k] += binomial(d - i, k - i) * h[i];
    return f;
}

IntVector h_prime(const IntVector& h, const BettiVector& b, int d) {
    check_length(h, d, "h_prime");
    IntVector out(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) out[i] = h[i] - binomial(d, i) * alternating_betti_sum(b, i, i - 1);
    if (d >= 1 && out[d] != betti(b, d - 1))
        throw std::invalid_argument("h_prime: h'_d = " + out[d].get_str() + " differs from beta_{d-1} = " +
                                    betti(b, d - 1).get_str() + "; h-vector and Betti numbers are inconsistent");
    return out;
}

IntVector h_double_prime(const IntVector& h, const BettiVector& b, int d) {
    IntVector out = h_prime(h, b, d);
    for (int i = 0; i < d; ++i) out[i] = h[i] - binomial(d, i) * alternating_betti_sum(b, i, i);
    return out;
}

IntVector g_vector(const IntVector& h) {
    IntVector g(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) g[i] = i == 0 ? h[0] : h[i] - h[i - 1];
    return g;
}

IntVector g_tilde(const IntVector& h, const BettiVector& b, int d) {
    check_length(h, d, "g_tilde");
    IntVector out{Integer(1)};
    for (int r = 1; r <= d / 2; ++r) out.push_back(h[r] - h[r - 1] - binomial(d + 1, r) * alternating_betti_sum(b, r, r));
    return out;
}

IntVector g_tilde(const SimplicialComplex& complex, const FieldSpec& field) {
    const int d = complex.dim() + 1;
    return g_tilde(h_from_f(f_vector(complex), d), betti_numbers(complex, field), d);
}

VectorSuite compute_vectors(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    VectorSuite s;
    s.d = complex.dim() + 1;
    s.field = field;
    s.f = f_vector(complex);
    s.h = h_from_f(s.f, s.d);
    s.betti = betti_numbers(complex, field, policy);
    s.h_prime = h_prime(s.h, s.betti, s.d);
    s.h_double_prime = h_double_prime(s.h, s.betti, s.d);
    s.g = g_vector(s.h);
    s.g_tilde = g_tilde(s.h, s.betti, s.d);
    return s;
}

bool DehnSommervilleResidual::all_zero() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(euler_form.begin(), euler_form.end(), zero) &&
           std::all_of(betti_form.begin(), betti_form.end(), zero);
}

DehnSommervilleResidual dehn_sommerville_residual(const SimplicialComplex& complex, const FieldSpec& field,
                                                  ExecPolicy policy) {
    if (!is_pure(complex) || !is_manifold_with_boundary(complex, field, policy))
        throw PreconditionError("dehn_sommerville_residual: not a homology manifold with boundary over " + field.name());
    const SimplicialComplex boundary = boundary_complex(complex, field, policy);
    if (boundary.is_empty_complex())
        throw PreconditionError("dehn_sommerville_residual: the boundary is empty (closed manifold)");

    const VectorSuite s = compute_vectors(complex, field, policy);
    const int d = s.d;
    const IntVector h_boundary = h_from_f(f_vector(boundary), d - 1);
    const IntVector g_boundary = g_vector(h_boundary);
    const Integer chi(static_cast<long>(reduced_euler_characteristic(complex)));

    DehnSommervilleResidual out;
    for (int i = 0; i <= d; ++i) {
        // The boundary h-vector stops at d-1, so g_d(∂Δ) = -h_{d-1}(∂Δ).
        const Integer g_i = i < d ? g_boundary[i] : Integer(-h_boundary[d - 1]);
        const Integer eq2 = s.h[i] - s.h[d - i] + binomial(d, i) * sign_of(d - 1 - i) * chi;
        Integer tail = 0;
        for (int k = d - i; k <= d - 1; ++k) tail += sign_of(d - 1 - i - k) * betti(s.betti, k);
        const Integer eq3 = s.h[i] - s.h_double_prime[d - i] + binomial(d, i) * tail;
        out.euler_form.push_back(g_i - eq2);
        out.betti_form.push_back(g_i - eq3);
    }
    return out;
}

Integer macaulay_bound(const Integer& a, int i) {
    if (i < 1) throw std::invalid_argument("macaulay_bound: i must be >= 1");
    if (a < 0) throw std::invalid_argument("macaulay_bound: negative value");
    Integer rest = a;
    Integer bound = 0;
    for (int level = i; level >= 1 && rest > 0; --level) {
        // Largest k with C(k, level) <= rest; C(level, level) = 1 <= rest.
        long lo = level, hi = level + 1;
        while (binomial(hi, level) <= rest) hi = lo + 2 * (hi - lo);
        while (hi - lo > 1) {
            const long mid = lo + (hi - lo) / 2;
            (binomial(mid, level) <= rest ? lo : hi) = mid;
        }
        rest -= binomial(lo, level);
        bound += binomial(lo + 1, level + 1);
    }
    return bound;
}

MVectorVerdict is_m_vector(const IntVector& v) {
    MVectorVerdict out;
    if (v.empty() || v[0] != 1) {
        out.first_violation_index = 0;
        return out;
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < 0) {
            out.first_violation_index = i;
            return out;
        }
        if (i >= 2 && v[i] > macaulay_bound(v[i - 1], static_cast<int>(i - 1))) {
            out.first_violation_index = i;
            return out;
        }
    }
    out.is_m_vector = true;
    return out;
}

DualityReport symmetry_and_duality_checks(const SimplicialComplex& complex, const FieldSpec& field,
                                          ExecPolicy policy) {
    if (!is_pure(complex) || !is_connected(complex) || !is_closed_manifold(complex, field, policy))
        throw PreconditionError("symmetry_and_duality_checks: needs a connected closed homology manifold over " +
                                field.name());
    const VectorSuite s = compute_vectors(complex, field, policy);
    const int d = s.d;
    if (s.betti.at(d - 1) != 1)
        throw PreconditionError("symmetry_and_duality_checks: not orientable over " + field.name());

    auto finish = [](IdentityCheck& c) {
        c.holds = std::all_of(c.residual.begin(), c.residual.end(), [](const Integer& x) { return x == 0; });
    };
    DualityReport out;
    for (int i = 0; i <= d; ++i) out.h_double_prime_symmetry.residual.push_back(s.h_double_prime[i] - s.h_double_prime[d - i]);
    for (int i = 1; i <= d / 2; ++i)
        out.g_tilde_formula.residual.push_back(s.g_tilde[i] - (s.h_double_prime[d - i] - at_or_zero(s.h_prime, d - i + 1)));
    for (int i = 2; i <= d - 1; ++i) out.poincare_duality.residual.push_back(betti(s.betti, d - i) - betti(s.betti, i - 1));
    finish(out.h_double_prime_symmetry);
    finish(out.g_tilde_formula);
    finish(out.poincare_duality);
    return out;
}

GlbcProbe glbc_probe(const IntVector& g_tilde) {
    GlbcProbe out;
    for (std::size_t r = 1; r < g_tilde.size(); ++r) {
        if (!out.min_value || g_tilde[r] < *out.min_value) out.min_value = g_tilde[r];
        if (g_tilde[r] < 0 && !out.first_negative_index) out.first_negative_index = r;
    }
    return out;
}

}  // namespace rstack
