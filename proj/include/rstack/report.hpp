#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rstack/complex.hpp"
#include "rstack/enumerative.hpp"
#include "rstack/homology.hpp"
#include "rstack/manifold.hpp"
#include "rstack/stackedness.hpp"

namespace rstack {

inline constexpr int kReportFormatVersion = 1;

struct AnalysisOptions {
    FieldSpec field = FieldSpec::rationals();
    std::optional<int> max_level;  // default ⌊(dim+1)/2⌋
    SearchLimits limits = SearchLimits::from_environment();
    ExecPolicy policy = ExecPolicy::parallel;
    std::string input_name = "<input>";
    std::vector<std::string> labels;  // echoed when relabeled is set
    bool relabeled = false;
};

/// Stackedness at one level. Entries that do not apply to the complex are
/// left empty; `skipped` says why.
struct LevelEntry {
    int level = 0;
    std::optional<StackednessVerdict> verdict;  // interior faces or Δ(r) reconstruction
    std::optional<StackednessVerdict> via_h;    // with boundary only
    std::optional<StackednessVerdict> locally;  // closed only
    std::vector<std::string> skipped;
};

/// g̃_k next to the (k-1)-stacked verdict for closed manifolds of dimension
/// 2k-1. Nothing is asserted about the pair.
struct GTildeVsStacked {
    int k = 0;
    Integer g_tilde_k;
    bool stacked = false;
};

struct AnalysisReport {
    int format_version = kReportFormatVersion;
    std::string input_name;
    int universe = 0;
    int dim = 0;
    std::size_t num_facets = 0;
    std::vector<std::string> labels;
    bool relabeled = false;
    FieldSpec requested_field = FieldSpec::rationals();
    VectorSuite vectors;  // over classification.field
    ClassificationReport classification;
    int max_level = 0;
    std::vector<LevelEntry> stackedness;
    std::optional<DehnSommervilleResidual> dehn_sommerville;
    GlbcProbe glbc;
    MVectorVerdict g_tilde_m_vector;
    std::optional<DualityReport> identities;
    std::optional<GTildeVsStacked> g_tilde_vs_stacked;
};

/// Runs every applicable analysis. Throws PreconditionError on the void
/// complex and SizeGuardError when a Δ(r) search exceeds its cap.
AnalysisReport analyze(const SimplicialComplex& complex, const AnalysisOptions& options = {});

std::string to_json(const AnalysisReport& report, int indent = 2);
std::string to_text(const AnalysisReport& report);

/// "(a, b, c)".
std::string format_tuple(const IntVector& v);

}  // namespace rstack
