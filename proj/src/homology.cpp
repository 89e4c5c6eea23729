#include "rstack/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#ifdef RSTACK_HAVE_OPENMP
#include <omp.h>
#endif

namespace rstack {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Column reduction shared by both fields: columns are reduced in order of
// increasing length against earlier pivots keyed by their largest row.
template <typename Scalar, typename Ops>
std::size_t reduce_rank(const BoundaryMatrix& m, Ops ops) {
    using Column = std::vector<std::pair<std::uint32_t, Scalar>>;
    std::vector<std::size_t> order(m.cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.columns[a].size() < m.columns[b].size(); });

    std::unordered_map<std::uint32_t, Column> pivots;
    pivots.reserve(m.cols);
    Column scratch;
    for (std::size_t j : order) {
        Column col;
        col.reserve(m.columns[j].size());
        for (auto [row, value] : m.columns[j]) col.emplace_back(row, ops.from_int(value));
        while (!col.empty()) {
            auto it = pivots.find(col.back().first);
            if (it == pivots.end()) break;
            ops.eliminate(col, it->second, scratch);
        }
        if (!col.empty()) {
            ops.normalize(col);
            const std::uint32_t low = col.back().first;
            pivots.emplace(low, std::move(col));
        }
    }
    return pivots.size();
}

// col <- a*col - b*pivot where a, b are the two entries at the shared low
// row, then divided by its content.
struct RationalOps {
    mpz_class from_int(int v) const { return mpz_class(v); }

    void eliminate(std::vector<std::pair<std::uint32_t, mpz_class>>& col,
                   const std::vector<std::pair<std::uint32_t, mpz_class>>& pivot,
                   std::vector<std::pair<std::uint32_t, mpz_class>>& out) const {
        const mpz_class a = pivot.back().second;
        const mpz_class b = col.back().second;
        out.clear();
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
                out.emplace_back(col[i].first, a * col[i].second);
                ++i;
            } else if (i == col.size() || pivot[j].first < col[i].first) {
                out.emplace_back(pivot[j].first, -b * pivot[j].second);
                ++j;
            } else {
                mpz_class v = a * col[i].second - b * pivot[j].second;
                if (v != 0) out.emplace_back(col[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        col.swap(out);
        normalize(col);
    }

    void normalize(std::vector<std::pair<std::uint32_t, mpz_class>>& col) const {
        if (col.empty()) return;
        mpz_class g = 0;
        for (const auto& e : col) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g == 1) break;
        }
        if (col.back().second < 0) g = -g;
        if (g != 1)
            for (auto& e : col) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
};

struct ModularOps {
    std::uint64_t p;

    std::uint64_t from_int(int v) const {
        const auto r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }

    std::uint64_t inverse(std::uint64_t a) const {
        std::uint64_t result = 1, e = p - 2;
        while (e) {
            if (e & 1) result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    }

    // Pivots are normalized to a unit low entry, so col <- col - b*pivot.
    void eliminate(std::vector<std::pair<std::uint32_t, std::uint64_t>>& col,
                   const std::vector<std::pair<std::uint32_t, std::uint64_t>>& pivot,
                   std::vector<std::pair<std::uint32_t, std::uint64_t>>& out) const {
        const std::uint64_t b = col.back().second;
        out.clear();
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
                out.push_back(col[i++]);
            } else if (i == col.size() || pivot[j].first < col[i].first) {
                out.emplace_back(pivot[j].first, (p - b * pivot[j].second % p) % p);
                ++j;
            } else {
                const std::uint64_t v = (col[i].second + p - b * pivot[j].second % p) % p;
                if (v != 0) out.emplace_back(col[i].first, v);
                ++i;
                ++j;
            }
        }
        col.swap(out);
    }

    void normalize(std::vector<std::pair<std::uint32_t, std::uint64_t>>& col) const {
        const std::uint64_t inv = inverse(col.back().second);
        for (auto& e : col) e.second = e.second * inv % p;
    }
};

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rat" || text == "Q") return rationals();
    if (text == "gf2") return prime(2);
    if (text.starts_with("gf:")) {
        const std::string_view digits = text.substr(3);
        std::uint32_t p = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected rat, gf2 or gf:<p>)");
}

std::string FieldSpec::name() const {
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.dim()) throw std::invalid_argument("boundary_matrix: k out of range");
    BoundaryMatrix m;
    m.k = k;
    const auto& cols = complex.faces(k);
    const auto& rows = complex.faces(k - 1);
    m.rows = rows.size();
    m.cols = cols.size();
    m.columns.resize(cols.size());
    if (k == 0) {
        for (auto& c : m.columns) c.emplace_back(0U, 1);
        return m;
    }
    std::unordered_map<Face, std::uint32_t> index;
    index.reserve(rows.size());
    for (std::uint32_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& column = m.columns[j];
        int i = 0;
        cols[j].for_each_vertex([&](Vertex v) {
            column.emplace_back(index.at(cols[j].without(v)), (i % 2 == 0) ? 1 : -1);
            ++i;
        });
        std::sort(column.begin(), column.end());
    }
    return m;
}

std::size_t matrix_rank(const BoundaryMatrix& m, const FieldSpec& field) {
    if (m.cols == 0 || m.rows == 0) return 0;
    if (field.is_rationals()) return reduce_rank<mpz_class>(m, RationalOps{});
    return reduce_rank<std::uint64_t>(m, ModularOps{field.characteristic()});
}

BettiVector betti_numbers(const SimplicialComplex& complex, const FieldSpec& field, ExecPolicy policy) {
    if (complex.is_void()) throw PreconditionError("betti_numbers: the void complex has no reduced homology");
    BettiVector out;
    out.field = field;
    const int dim = complex.dim();
    if (dim < 0) {
        out.empty_face_class = true;
        return out;
    }
    // Materialize faces up front so worker threads only read the cache.
    for (int k = -1; k <= dim; ++k) (void)complex.faces(k);

    // ranks[k] = rank ∂_k for k = 0..dim; rank ∂_{dim+1} = 0.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);
    const int count = dim + 1;
    if (policy == ExecPolicy::parallel) {
#ifdef RSTACK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
#endif
        for (int k = 0; k < count; ++k)
            ranks[static_cast<std::size_t>(k)] = matrix_rank(boundary_matrix(complex, k), field);
    } else {
        for (int k = 0; k < count; ++k)
            ranks[static_cast<std::size_t>(k)] = matrix_rank(boundary_matrix(complex, k), field);
    }
    out.values.resize(static_cast<std::size_t>(count));
    for (int k = 0; k <= dim; ++k) {
        const auto fk = static_cast<std::int64_t>(complex.num_faces(k));
        out.values[static_cast<std::size_t>(k)] = fk - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k)]) -
                                                  static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k + 1)]);
    }
    return out;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
    std::int64_t chi = 0;
    for (int k = -1; k <= complex.dim(); ++k) {
        const auto fk = static_cast<std::int64_t>(complex.num_faces(k));
        chi += (k % 2 == 0) ? fk : -fk;
    }
    return chi;
}

}  // namespace rstack
