#include "rstack/report.hpp"

#include <json.hpp>
#include <sstream>

namespace rstack {

namespace {

using Json = nlohmann::ordered_json;

const Integer kJsonSafe = Integer(1) << 53;  // mpz_class shift

Json integer_json(const Integer& x) {
    if (abs(x) < kJsonSafe) return Json(x.get_si());
    return Json{{"big", x.get_str()}};
}

Json vector_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

Json betti_json(const BettiVector& b) {
    return Json{{"field", b.field.name()}, {"empty_face_class", b.empty_face_class}, {"values", b.values}};
}

Json verdict_json(const StackednessVerdict& v) {
    Json out{{"r", v.r},
             {"stack_level", v.stack_level},
             {"verdict", v.verdict},
             {"criterion", criterion_name(v.criterion)}};
    out["witness_facets"] = v.witness ? Json(v.witness->facets().size()) : Json(nullptr);
    out["notes"] = v.notes;
    return out;
}

template <class T, class F>
Json optional_json(const std::optional<T>& value, F&& convert) {
    return value ? convert(*value) : Json(nullptr);
}

Json identity_json(const IdentityCheck& c) { return Json{{"holds", c.holds}, {"residual", vector_json(c.residual)}}; }

Json classification_json(const ClassificationReport& c) {
    Json out{{"field", c.field.name()},
             {"pure", c.is_pure},
             {"connected", c.is_connected},
             {"cohen_macaulay", c.is_cohen_macaulay},
             {"buchsbaum", c.is_buchsbaum},
             {"homology_sphere", c.is_homology_sphere},
             {"homology_ball", c.is_homology_ball},
             {"closed_manifold", c.is_closed_manifold},
             {"manifold_with_boundary", c.is_manifold_with_boundary},
             {"boundary_is_empty", c.boundary_is_empty}};
    out["orientable"] = c.is_orientable ? Json(*c.is_orientable) : Json(nullptr);
    out["boundary_facets"] = c.boundary && !c.boundary->is_empty_complex() ? Json(c.boundary->facets().size())
                                                                           : Json(nullptr);
    out["interior_face_counts"] = c.interior_face_counts;
    out["unused_vertices"] = c.unused_vertices;
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string betti_tuple(const BettiVector& b) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < b.values.size(); ++i) out << (i ? ", " : "") << b.values[i];
    out << ')';
    return out.str();
}

void append_notes(std::ostringstream& out, const StackednessVerdict& v) {
    if (v.witness) out << "    witness: " << v.witness->facets().size() << " facets\n";
    for (const auto& note : v.notes) out << "    note: " << note << '\n';
}

}  // namespace

std::string format_tuple(const IntVector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].get_str();
    out << ')';
    return out.str();
}

AnalysisReport analyze(const SimplicialComplex& complex, const AnalysisOptions& options) {
    if (complex.is_void()) throw PreconditionError("analyze: void complex");
    AnalysisReport r;
    r.input_name = options.input_name;
    r.universe = complex.universe();
    r.dim = complex.dim();
    r.num_facets = complex.facets().size();
    r.labels = options.labels;
    r.relabeled = options.relabeled;
    r.requested_field = options.field;
    r.classification = classify(complex, options.field, options.policy);
    const FieldSpec field = r.classification.field;
    r.vectors = compute_vectors(complex, field, options.policy);
    const int d = r.vectors.d;

    r.max_level = options.max_level.value_or((complex.dim() + 1) / 2);
    if (r.max_level < 0) throw std::invalid_argument("analyze: max level must be non-negative");
    const bool with_boundary = r.classification.has_nonempty_boundary();
    const bool closed = r.classification.is_closed_manifold;
    for (int level = 0; level <= r.max_level; ++level) {
        LevelEntry entry;
        entry.level = level;
        const int rr = level + 1;
        if (with_boundary) {
            entry.verdict = is_stacked_with_boundary(complex, level, field);
            if (rr <= d) entry.via_h = is_stacked_via_h(complex, rr, field);
            else entry.skipped.push_back("h'' criterion needs r <= d");
        } else if (closed) {
            entry.verdict = is_stacked_closed(complex, rr, field, options.limits);
            if (2 * rr <= d) entry.locally = is_locally_stacked(complex, rr, field, options.limits);
            else entry.skipped.push_back("local criterion needs r <= d/2");
        } else {
            entry.skipped.push_back("not a homology manifold");
        }
        r.stackedness.push_back(std::move(entry));
    }

    if (with_boundary) r.dehn_sommerville = dehn_sommerville_residual(complex, field, options.policy);
    r.glbc = glbc_probe(r.vectors.g_tilde);
    r.g_tilde_m_vector = is_m_vector(r.vectors.g_tilde);
    if (closed && r.classification.is_connected && r.vectors.betti.at(d - 1) == 1)
        r.identities = symmetry_and_duality_checks(complex, field, options.policy);
    if (closed && d >= 2 && d % 2 == 0) {
        GTildeVsStacked q;
        q.k = d / 2;
        q.g_tilde_k = r.vectors.g_tilde[static_cast<std::size_t>(q.k)];
        const int level = q.k - 1;
        if (level <= r.max_level) q.stacked = r.stackedness[static_cast<std::size_t>(level)].verdict->verdict;
        else q.stacked = is_stacked_closed(complex, q.k, field, options.limits).verdict;
        r.g_tilde_vs_stacked = q;
    }
    return r;
}

std::string to_json(const AnalysisReport& r, int indent) {
    Json out;
    out["format_version"] = r.format_version;
    Json input{{"name", r.input_name}, {"n", r.universe}, {"dim", r.dim}, {"facets", r.num_facets}};
    input["labels"] = r.relabeled ? Json(r.labels) : Json(nullptr);
    out["input"] = input;
    out["requested_field"] = r.requested_field.name();
    out["field"] = r.classification.field.name();
    const VectorSuite& s = r.vectors;
    out["vectors"] = Json{{"d", s.d},
                          {"f", vector_json(s.f)},
                          {"h", vector_json(s.h)},
                          {"h_prime", vector_json(s.h_prime)},
                          {"h_double_prime", vector_json(s.h_double_prime)},
                          {"g", vector_json(s.g)},
                          {"g_tilde", vector_json(s.g_tilde)}};
    out["betti"] = betti_json(s.betti);
    out["classification"] = classification_json(r.classification);

    Json levels = Json::array();
    for (const auto& e : r.stackedness) {
        Json entry{{"level", e.level}};
        entry["verdict"] = optional_json(e.verdict, verdict_json);
        entry["via_h"] = optional_json(e.via_h, verdict_json);
        entry["locally"] = optional_json(e.locally, verdict_json);
        entry["skipped"] = e.skipped;
        levels.push_back(std::move(entry));
    }
    out["max_level"] = r.max_level;
    out["stackedness"] = levels;
    out["dehn_sommerville"] = optional_json(r.dehn_sommerville, [](const DehnSommervilleResidual& ds) {
        return Json{{"all_zero", ds.all_zero()},
                    {"euler_form", vector_json(ds.euler_form)},
                    {"betti_form", vector_json(ds.betti_form)}};
    });
    Json glbc;
    glbc["min_g_tilde"] = optional_json(r.glbc.min_value, integer_json);
    glbc["first_negative_index"] = r.glbc.first_negative_index ? Json(*r.glbc.first_negative_index) : Json(nullptr);
    out["glbc_probe"] = glbc;
    Json mv{{"is_m_vector", r.g_tilde_m_vector.is_m_vector}};
    mv["first_violation_index"] =
        r.g_tilde_m_vector.first_violation_index ? Json(*r.g_tilde_m_vector.first_violation_index) : Json(nullptr);
    out["g_tilde_m_vector"] = mv;
    out["identities"] = optional_json(r.identities, [](const DualityReport& d) {
        return Json{{"all_hold", d.all_hold()},
                    {"h_double_prime_symmetry", identity_json(d.h_double_prime_symmetry)},
                    {"g_tilde_formula", identity_json(d.g_tilde_formula)},
                    {"poincare_duality", identity_json(d.poincare_duality)}};
    });
    out["g_tilde_vs_stacked"] = optional_json(r.g_tilde_vs_stacked, [](const GTildeVsStacked& q) {
        return Json{{"k", q.k}, {"g_tilde_k", integer_json(q.g_tilde_k)}, {"stacked", q.stacked}};
    });
    return out.dump(indent);
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    const ClassificationReport& c = r.classification;
    const VectorSuite& s = r.vectors;
    out << "rstack report (format " << r.format_version << ")\n";
    out << "input: " << r.input_name << "  n = " << r.universe << ", dim = " << r.dim << ", facets = " << r.num_facets
        << '\n';
    if (r.relabeled) {
        out << "labels:";
        for (std::size_t i = 0; i < r.labels.size(); ++i) out << ' ' << r.labels[i] << "->" << i + 1;
        out << '\n';
    }
    out << "field: " << c.field.name();
    if (!(c.field == r.requested_field)) out << " (requested " << r.requested_field.name() << ")";
    out << '\n';

    out << "f = " << format_tuple(s.f) << '\n';
    out << "h = " << format_tuple(s.h) << '\n';
    out << "h' = " << format_tuple(s.h_prime) << '\n';
    out << "h'' = " << format_tuple(s.h_double_prime) << '\n';
    out << "g = " << format_tuple(s.g) << '\n';
    out << "g~ = " << format_tuple(s.g_tilde) << '\n';
    out << "betti = " << betti_tuple(s.betti) << '\n';

    out << "pure: " << yes_no(c.is_pure) << '\n';
    out << "connected: " << yes_no(c.is_connected) << '\n';
    out << "cohen-macaulay: " << yes_no(c.is_cohen_macaulay) << '\n';
    out << "buchsbaum: " << yes_no(c.is_buchsbaum) << '\n';
    out << "homology sphere: " << yes_no(c.is_homology_sphere) << '\n';
    out << "homology ball: " << yes_no(c.is_homology_ball) << '\n';
    out << "closed manifold: " << yes_no(c.is_closed_manifold) << '\n';
    out << "manifold with boundary: " << yes_no(c.is_manifold_with_boundary) << '\n';
    if (c.boundary) {
        if (c.boundary->is_empty_complex()) out << "boundary: empty\n";
        else out << "boundary: " << c.boundary->facets().size() << " facets\n";
    }
    out << "orientable: " << (c.is_orientable ? yes_no(*c.is_orientable) : "n/a") << '\n';
    if (!c.interior_face_counts.empty()) {
        out << "interior faces = (";
        for (std::size_t i = 0; i < c.interior_face_counts.size(); ++i)
            out << (i ? ", " : "") << c.interior_face_counts[i];
        out << ")\n";
    }
    if (!c.unused_vertices.empty()) {
        out << "unused vertices:";
        for (Vertex v : c.unused_vertices) out << ' ' << v;
        out << '\n';
    }

    out << "stackedness (levels 0.." << r.max_level << "):\n";
    for (const auto& e : r.stackedness) {
        const std::string name = std::to_string(e.level) + "-stacked";
        if (e.locally || (e.verdict && e.verdict->criterion == Criterion::delta_reconstruction)) {
            out << "  locally " << name << ": " << (e.locally ? yes_no(e.locally->verdict) : "n/a") << "; " << name
                << ": " << yes_no(e.verdict->verdict) << '\n';
            append_notes(out, *e.verdict);
            if (e.locally) append_notes(out, *e.locally);
        } else if (e.verdict) {
            out << "  " << name << ": " << yes_no(e.verdict->verdict) << '\n';
            out << "    interior-faces: " << yes_no(e.verdict->verdict);
            if (e.via_h) out << "; h''_" << e.via_h->r << " = 0: " << yes_no(e.via_h->verdict);
            out << '\n';
            append_notes(out, *e.verdict);
        } else {
            out << "  " << name << ": n/a\n";
        }
        for (const auto& why : e.skipped) out << "    skipped: " << why << '\n';
    }

    if (r.dehn_sommerville) {
        out << "dehn-sommerville residuals: " << (r.dehn_sommerville->all_zero() ? "zero" : "NONZERO") << '\n';
        out << "  euler form = " << format_tuple(r.dehn_sommerville->euler_form) << '\n';
        out << "  betti form = " << format_tuple(r.dehn_sommerville->betti_form) << '\n';
    }
    out << "min g~_r (r >= 1): " << (r.glbc.min_value ? r.glbc.min_value->get_str() : "n/a");
    if (r.glbc.first_negative_index) out << "; first negative at r = " << *r.glbc.first_negative_index;
    out << '\n';
    out << "g~ is an M-vector: " << yes_no(r.g_tilde_m_vector.is_m_vector);
    if (r.g_tilde_m_vector.first_violation_index) out << " (violation at " << *r.g_tilde_m_vector.first_violation_index << ")";
    out << '\n';
    if (r.identities) {
        out << "h'' symmetry: " << yes_no(r.identities->h_double_prime_symmetry.holds) << '\n';
        out << "g~ formula: " << yes_no(r.identities->g_tilde_formula.holds) << '\n';
        out << "poincare duality: " << yes_no(r.identities->poincare_duality.holds) << '\n';
    }
    if (r.g_tilde_vs_stacked) {
        const auto& q = *r.g_tilde_vs_stacked;
        out << "g~_" << q.k << " = " << q.g_tilde_k.get_str() << "; " << q.k - 1 << "-stacked: " << yes_no(q.stacked)
            << '\n';
    }
    return out.str();
}

}  // namespace rstack
