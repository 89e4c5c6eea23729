#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rstack/enumerative.hpp"
#include "rstack/generators.hpp"
#include "rstack/manifold.hpp"

using namespace rstack;

namespace {

IntVector ints(std::initializer_list<long> values) {
    IntVector out;
    for (long v : values) out.emplace_back(v);
    return out;
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6},
                                              {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

}  // namespace

TEST_SUITE("enumerative") {

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("f and h vectors") {
    CHECK(f_vector(simplex_boundary(3)) == ints({1, 4, 6, 4}));
    CHECK(h_from_f(f_vector(simplex_boundary(3)), 3) == ints({1, 1, 1, 1}));
    CHECK(h_from_f(f_vector(join_boundaries(2, 2)), 4) == ints({1, 2, 3, 2, 1}));
    CHECK(h_from_f(f_vector(cross_polytope(3)), 3) == ints({1, 3, 3, 1}));
    CHECK(f_vector(SimplicialComplex::empty_complex(0)) == ints({1}));
    CHECK_THROWS(f_vector(SimplicialComplex::void_complex(0)));
    CHECK_THROWS(h_from_f(ints({1, 2}), 3));
}

TEST_CASE("h by polynomial expansion and round trip") {
    auto corpus = fixtures::named_fixtures();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) corpus.push_back(fixtures::random_complex(9, 6, 5, seed));
    for (const auto& c : corpus) {
        const int d = c.dim() + 1;
        const IntVector f = f_vector(c);
        const IntVector h = h_from_f(f, d);
        CHECK(h == oracle::h_by_expansion(f, d));
        CHECK(f_from_h(h, d) == f);
    }
}

TEST_CASE("exact arithmetic beyond 64 bits") {
    const Integer big("1000000000000000000000000000000");
    const IntVector f{Integer(1), big, big * 3, big * big};
    const IntVector h = h_from_f(f, 3);
    CHECK(h == oracle::h_by_expansion(f, 3));
    CHECK(f_from_h(h, 3) == f);
}

TEST_CASE("h' and h'' of the Kuhnel-Lassmann strip") {
    const VectorSuite s = compute_vectors(kuhnel_lassmann(3, 7));
    CHECK(s.d == 3);
    CHECK(s.h == ints({1, 4, 3, -1}));
    CHECK(s.h_prime == ints({1, 4, 3, 0}));
    CHECK(s.h_double_prime == ints({1, 4, 0, 0}));
    CHECK(s.g == ints({1, 3, -1, -4}));
}

TEST_CASE("h' consistency guard") {
    BettiVector wrong;
    wrong.values = {0, 0, 5};
    CHECK_THROWS_AS(h_prime(ints({1, 1, 1, 1}), wrong, 3), std::invalid_argument);
}

TEST_CASE("g tilde") {
    CHECK(g_tilde(simplex_boundary(3)) == ints({1, 0}));
    CHECK(g_tilde(join_boundaries(2, 2)) == ints({1, 1, 1}));
    const auto kn = klee_novik(4, 1);
    CHECK(g_tilde(boundary_complex(kn)) == ints({1, 4}));
}

TEST_CASE("Dehn-Sommerville residuals vanish on manifolds with boundary") {
    for (const auto& c : {kuhnel_lassmann(3, 5), kuhnel_lassmann(4, 9), klee_novik(4, 0), klee_novik(5, 1),
                          full_simplex(4), stacked_ball(3, 9, 11)}) {
        const auto r = dehn_sommerville_residual(c);
        CHECK(r.euler_form.size() == static_cast<std::size_t>(c.dim() + 2));
        CHECK(r.all_zero());
    }
    CHECK_THROWS_AS(dehn_sommerville_residual(simplex_boundary(3)), PreconditionError);
}

TEST_CASE("Macaulay bound against the lex-segment oracle") {
    for (int i = 1; i <= 4; ++i)
        for (long a = 0; a <= 14; ++a) {
            CAPTURE(i);
            CAPTURE(a);
            CHECK(macaulay_bound(Integer(a), i) == oracle::macaulay_by_lex_segment(a, i));
        }
    CHECK_THROWS(macaulay_bound(Integer(3), 0));
}

TEST_CASE("M-vectors") {
    auto bad = is_m_vector(ints({1, 2, 4}));
    CHECK_FALSE(bad.is_m_vector);
    CHECK(bad.first_violation_index == 2);
    bad = is_m_vector(ints({1, 0, 1}));
    CHECK_FALSE(bad.is_m_vector);
    CHECK(bad.first_violation_index == 2);
    CHECK(is_m_vector(ints({1, 3, 6, 10})).is_m_vector);
    CHECK(is_m_vector(ints({1, 2, 3})).is_m_vector);
    CHECK(is_m_vector(ints({1})).is_m_vector);
    CHECK(is_m_vector(ints({2, 1})).first_violation_index == 0);
    CHECK(is_m_vector(ints({1, -1})).first_violation_index == 1);
    CHECK(is_m_vector({}).first_violation_index == 0);
}

TEST_CASE("duality identities on closed orientable manifolds") {
    for (int d = 2; d <= 5; ++d) {
        CHECK(symmetry_and_duality_checks(simplex_boundary(d)).all_hold());
        CHECK(symmetry_and_duality_checks(cross_polytope(d)).all_hold());
    }
    CHECK(symmetry_and_duality_checks(boundary_complex(klee_novik(4, 1))).all_hold());
    CHECK(symmetry_and_duality_checks(rp2(), FieldSpec::prime(2)).all_hold());
    CHECK_THROWS_AS(symmetry_and_duality_checks(rp2()), PreconditionError);
    CHECK_THROWS_AS(symmetry_and_duality_checks(kuhnel_lassmann(3, 7)), PreconditionError);
}

TEST_CASE("GLBC probe") {
    const auto p = glbc_probe(ints({1, 3, -2, 0}));
    CHECK(*p.min_value == -2);
    CHECK(*p.first_negative_index == 2);
    const auto q = glbc_probe(ints({1}));
    CHECK_FALSE(q.min_value.has_value());
    CHECK_FALSE(q.first_negative_index.has_value());
}

}  // TEST_SUITE
