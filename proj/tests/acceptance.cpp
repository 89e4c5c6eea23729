// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rstack/enumerative.hpp"
#include "rstack/generators.hpp"
#include "rstack/manifold.hpp"
#include "rstack/report.hpp"
#include "rstack/stackedness.hpp"

using namespace rstack;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) detail << what;
            else detail << "; " << what;
            passed = false;
        }
    }
};

using Pairs = std::vector<std::pair<int, int>>;
const Pairs kKuhnelLassmann{{3, 5}, {3, 7}, {4, 7}, {4, 9}, {5, 11}};
const Pairs kKleeNovik{{4, 0}, {4, 1}, {4, 2}, {5, 1}, {6, 1}};

std::string name_of(const char* family, std::pair<int, int> p) {
    return std::string(family) + "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

IntVector ints(std::initializer_list<long> values) {
    IntVector out;
    for (long v : values) out.emplace_back(v);
    return out;
}

void criterion_1(Outcome& o) {
    for (auto p : kKuhnelLassmann) {
        const auto [d, n] = p;
        const auto k = kuhnel_lassmann(d, n);
        IntVector expected(static_cast<std::size_t>(d + 1), 0);
        expected[0] = 1;
        expected[1] = n - d;
        o.require(compute_vectors(k).h_double_prime == expected, name_of("K", p) + " h''");
        o.require(is_manifold_with_boundary(k), name_of("K", p) + " manifold with boundary");
        o.require(is_stacked_with_boundary(k, 1).verdict, name_of("K", p) + " interior faces");
        o.require(is_stacked_via_h(k, 2).verdict, name_of("K", p) + " h''_2 = 0");
    }
}

void criterion_2(Outcome& o) {
    const auto missing = missing_faces(kuhnel_lassmann(4, 7));
    o.require(std::find(missing.begin(), missing.end(), Face::from_vertices({1, 4, 7})) != missing.end(),
              "{1,4,7} not missing");
}

void criterion_3(Outcome& o) {
    const std::vector<std::vector<std::int64_t>> betti{{1, 0, 2}, {0, 2, 1}, {1, 0, 2}, {0, 1, 1, 1}, {0, 1, 0, 1, 1}};
    for (std::size_t idx = 0; idx < kKleeNovik.size(); ++idx) {
        const auto p = kKleeNovik[idx];
        const auto [d, i] = p;
        const auto b = klee_novik(d, i);
        const IntVector h = compute_vectors(b).h_double_prime;
        for (int k = 0; k <= i; ++k) o.require(h[static_cast<std::size_t>(k)] == binomial(d, k), name_of("B", p) + " h''_k");
        o.require(h[static_cast<std::size_t>(i + 1)] == 0, name_of("B", p) + " h''_{i+1}");
        o.require(is_stacked_with_boundary(b, i).verdict, name_of("B", p) + " i-stacked");
        if (i > 0) o.require(!is_stacked_with_boundary(b, i - 1).verdict, name_of("B", p) + " not (i-1)-stacked");
        o.require(betti_numbers(boundary_complex(b)).values == betti[idx], name_of("B", p) + " boundary Betti");
    }
}

void criterion_4(Outcome& o) {
    std::vector<SimplicialComplex> corpus;
    for (auto [d, n] : kKuhnelLassmann) corpus.push_back(kuhnel_lassmann(d, n));
    for (auto [d, i] : kKleeNovik) corpus.push_back(klee_novik(d, i));
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        corpus.push_back(stacked_ball(3 + static_cast<int>(seed % 3), 7 + static_cast<int>(seed % 5), seed));
    int discrepancies = 0, compared = 0;
    for (const auto& c : corpus)
        for (int r = 1; r <= c.dim() + 1; ++r) {
            ++compared;
            if (is_stacked_with_boundary(c, r - 1).verdict != is_stacked_via_h(c, r).verdict) ++discrepancies;
        }
    o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
    o.detail << (o.passed ? "" : "; ") << compared << " comparisons";
}

void criterion_5(Outcome& o) {
    const auto ball = klee_novik(6, 1);
    const auto sigma = delta_r(boundary_complex(ball), 2);
    o.require(sigma == ball, "Delta(2) differs from B(6,1)");
    o.require(sigma.facets().size() == 12, "facet count " + std::to_string(sigma.facets().size()));
}

void criterion_6(Outcome& o) {
    const auto ball = klee_novik(6, 1);
    const auto boundary = boundary_complex(ball);
    const auto v = local_to_global(boundary, 2);
    o.require(v.verdict, "verdict false");
    o.require(v.witness && *v.witness == ball, "witness differs from B(6,1)");
    if (!v.witness) return;
    boundary.vertex_set().for_each_vertex([&](Vertex u) {
        o.require(link(*v.witness, Face::single(u)) == delta_r(link(boundary, Face::single(u)), 1),
                  "link mismatch at " + std::to_string(u));
    });
}

void criterion_7(Outcome& o) {
    const auto j = join_boundaries(2, 2);
    o.require(is_homology_sphere(j), "not a homology sphere");
    o.require(h_from_f(f_vector(j), 4) == ints({1, 2, 3, 2, 1}), "h-vector");
    o.require(is_locally_stacked(j, 2).verdict, "not locally stacked");
    o.require(!is_stacked_closed(j, 2).verdict, "reported stacked");
    o.require(delta_r(j, 1) == full_simplex(5), "Delta(1) is not the power set");
}

void criterion_8(Outcome& o) {
    for (auto p : kKuhnelLassmann)
        o.require(dehn_sommerville_residual(kuhnel_lassmann(p.first, p.second)).all_zero(), name_of("K", p));
    for (auto p : kKleeNovik)
        o.require(dehn_sommerville_residual(klee_novik(p.first, p.second)).all_zero(), name_of("B", p));
}

void criterion_9(Outcome& o) {
    const auto k = kuhnel_lassmann(5, 11);
    const IntVector gk = g_tilde(boundary_complex(k));
    const IntVector hk = compute_vectors(k).h_double_prime;
    o.require(gk == ints({1, 6, 0}), "g~(boundary K(5,11)) = " + format_tuple(gk));
    o.require(IntVector(hk.begin(), hk.begin() + 3) == gk, "h''(K(5,11)) truncated differs");
    const auto b = klee_novik(6, 1);
    const IntVector gb = g_tilde(boundary_complex(b));
    const IntVector hb = compute_vectors(b).h_double_prime;
    o.require(gb.size() == 3 && IntVector(hb.begin(), hb.begin() + 3) == gb, "B(6,1): " + format_tuple(gb));
}

std::vector<std::pair<std::string, SimplicialComplex>> closed_orientable() {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (int d = 2; d <= 5; ++d) out.emplace_back("boundary simplex " + std::to_string(d), simplex_boundary(d));
    for (int d = 2; d <= 5; ++d) out.emplace_back("cross polytope " + std::to_string(d), cross_polytope(d));
    out.emplace_back("boundary B(4,1)", boundary_complex(klee_novik(4, 1)));
    out.emplace_back("boundary B(6,1)", boundary_complex(klee_novik(6, 1)));
    return out;
}

void criterion_10(Outcome& o) {
    for (const auto& [name, c] : closed_orientable()) o.require(symmetry_and_duality_checks(c).all_hold(), name);
    o.require(symmetry_and_duality_checks(boundary_complex(kuhnel_lassmann(4, 9)), FieldSpec::prime(2)).all_hold(),
              "boundary K(4,9) over GF(2)");
}

void criterion_11(Outcome& o) {
    auto corpus = closed_orientable();
    corpus.emplace_back("join", join_boundaries(2, 2));
    for (const auto& [name, c] : corpus) o.require(is_m_vector(g_tilde(c)).is_m_vector, name);
    o.require(!is_m_vector(ints({1, 2, 4})).is_m_vector, "(1,2,4) accepted");
    o.require(!is_m_vector(ints({1, 0, 1})).is_m_vector, "(1,0,1) accepted");
}

void criterion_12(Outcome& o) {
    std::vector<std::pair<std::string, SimplicialComplex>> corpus;
    for (auto p : kKuhnelLassmann) corpus.emplace_back(name_of("K", p), kuhnel_lassmann(p.first, p.second));
    for (auto p : kKleeNovik) corpus.emplace_back(name_of("B", p), klee_novik(p.first, p.second));
    corpus.emplace_back("join", join_boundaries(2, 2));
    for (const auto& c : fixtures::stacked_cases(50))
        corpus.emplace_back("stacked seed " + std::to_string(c.seed), stacked_sphere(c.d, c.n, c.seed));

    for (const auto& [name, c] : corpus) {
        const BettiVector b = betti_numbers(c);
        std::int64_t alternating = -b.at(-1);
        for (std::size_t k = 0; k < b.values.size(); ++k) alternating += (k % 2 == 0 ? 1 : -1) * b.values[k];
        o.require(alternating == reduced_euler_characteristic(c), name + ": Euler-Poincare");

        for (int k = 1; k <= c.dim(); ++k) {
            const BoundaryMatrix lower = boundary_matrix(c, k - 1), upper = boundary_matrix(c, k);
            bool zero = true;
            for (const auto& column : upper.columns) {
                std::vector<std::int64_t> image(lower.rows, 0);
                for (const auto& [row, value] : column)
                    for (const auto& [r2, v2] : lower.columns[row]) image[r2] += value * v2;
                zero = zero && std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; });
            }
            o.require(zero, name + ": boundary squared at " + std::to_string(k));
        }

        const int d = c.dim() + 1;
        const IntVector f = f_vector(c);
        o.require(f_from_h(h_from_f(f, d), d) == f, name + ": f-h round trip");

        const auto missing = missing_faces(c);
        if (c.universe() > 16) continue;  // the subset sweep below is 2^n
        for (int r = 0; r <= c.dim(); ++r) {
            const auto outer = delta_r(c, r);
            const auto inner = delta_r(c, r + 1);
            bool nested = true, dual = true;
            for_each_subset(c.vertex_set(), [&](Face s) {
                nested = nested && (!inner.contains(s) || outer.contains(s));
                bool blocked = false;
                for (Face m : missing) blocked = blocked || (m.dim() <= r && m.is_subset_of(s));
                dual = dual && outer.contains(s) == !blocked;
            });
            o.require(nested, name + ": Delta(r) nesting at " + std::to_string(r));
            o.require(dual, name + ": missing-face duality at " + std::to_string(r));
        }
    }
    o.detail << (o.passed ? "" : "; ") << corpus.size() << " complexes";
}

struct AcceptanceCriterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const std::vector<AcceptanceCriterion> criteria{
        {1, "Kuhnel-Lassmann h'' vectors and 1-stackedness", 5, criterion_1},
        {2, "missing face {1,4,7} in K(4,7)", 1, criterion_2},
        {3, "Klee-Novik h'' vectors, stackedness, boundary Betti numbers", 60, criterion_3},
        {4, "interior-face and h'' criteria agree", 60, criterion_4},
        {5, "Delta(2) of boundary B(6,1) is B(6,1)", 30, criterion_5},
        {6, "local-to-global on boundary B(6,1)", 60, criterion_6},
        {7, "join of triangle boundaries: locally but not globally 1-stacked", 30, criterion_7},
        {8, "Dehn-Sommerville residuals vanish", 60, criterion_8},
        {9, "boundary g-tilde equals h'' of the ball", 30, criterion_9},
        {10, "h'' symmetry, g-tilde formula, Poincare duality", 60, criterion_10},
        {11, "g-tilde is an M-vector; Macaulay rejects (1,2,4), (1,0,1)", 30, criterion_11},
        {12, "property suites on fixtures and 50 stacked spheres", 300, criterion_12},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds <= c.budget_seconds, "over time budget");
        failures += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << seconds << " s)";
        const std::string detail = o.detail.str();
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
