#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rstack/facet_io.hpp"
#include "rstack/generators.hpp"
#include "rstack/report.hpp"

namespace {

using namespace rstack;

constexpr int kExitError = 2;

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::string labelled_facets(const FacetFile& input, const SimplicialComplex& complex) {
    std::string header;
    if (input.relabeled) {
        header = "# labels:";
        for (std::size_t i = 0; i < input.labels.size(); ++i)
            header += " " + input.labels[i] + "->" + std::to_string(i + 1);
        header += '\n';
    }
    return header + facets_to_string(complex);
}

int run_analyze(const std::string& path, const std::string& field, std::optional<int> max_level,
                const std::string& format, bool serial) {
    const FacetFile input = read_facet_file(path);
    AnalysisOptions options;
    options.field = FieldSpec::parse(field);
    options.max_level = max_level;
    options.policy = serial ? ExecPolicy::serial : ExecPolicy::parallel;
    options.input_name = path;
    options.labels = input.labels;
    options.relabeled = input.relabeled;
    const AnalysisReport report = analyze(input.complex, options);
    std::cout << (format == "json" ? to_json(report) + "\n" : to_text(report));
    return 0;
}

int run_generate(const std::string& family, const std::vector<int>& params, std::optional<std::uint64_t> seed,
                 const std::string& output) {
    FamilySpec spec{parse_family(family), params, seed};
    emit(output, facets_to_string(generate(spec)));
    return 0;
}

int run_check_stacked(const std::string& path, int r, const std::string& mode, const std::string& field_text) {
    if (r < 1) throw std::invalid_argument("--r must be >= 1");
    const FacetFile input = read_facet_file(path);
    const SimplicialComplex& complex = input.complex;
    const ClassificationReport c = classify(complex, FieldSpec::parse(field_text));
    const bool with_boundary = c.has_nonempty_boundary();
    const bool closed = c.is_closed_manifold;

    std::string effective = mode;
    if (mode == "auto") {
        if (with_boundary) effective = "with-boundary";
        else if (closed) effective = "closed";
        else throw PreconditionError("input is not a homology manifold over " + c.field.name());
    }
    if (effective == "with-boundary" && !with_boundary)
        throw PreconditionError("mode with-boundary, but the input is not a homology manifold with nonempty boundary");
    if (effective == "closed" && !closed)
        throw PreconditionError("mode closed, but the input is not a closed homology manifold");

    StackednessVerdict v = effective == "closed" ? is_stacked_closed(complex, r, c.field)
                                                 : is_stacked_with_boundary(complex, r - 1, c.field);
    std::cout << "mode: " << effective << '\n';
    std::cout << "field: " << c.field.name() << '\n';
    std::cout << "r = " << v.r << " (" << v.stack_level << "-stacked): " << (v.verdict ? "yes" : "no") << '\n';
    std::cout << "criterion: " << criterion_name(v.criterion) << '\n';
    if (effective == "with-boundary" && r <= complex.dim() + 1) {
        const StackednessVerdict h = is_stacked_via_h(complex, r, c.field);
        std::cout << "h''_" << r << " = 0: " << (h.verdict ? "yes" : "no") << '\n';
    }
    if (v.witness) std::cout << "witness: " << v.witness->facets().size() << " facets\n";
    for (const auto& note : v.notes) std::cout << "note: " << note << '\n';
    return v.verdict ? 0 : 1;
}

int run_reconstruct(const std::string& path, int r, const std::string& output) {
    const FacetFile input = read_facet_file(path);
    emit(output, labelled_facets(input, delta_r(input.complex, r)));
    return 0;
}

int run_boundary(const std::string& path, const std::string& field, const std::string& output) {
    const FacetFile input = read_facet_file(path);
    emit(output, labelled_facets(input, boundary_complex(input.complex, FieldSpec::parse(field))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, face numbers and stackedness of simplicial complexes"};
    app.require_subcommand(1);

    const auto field_check = [](const std::string& text) -> std::string {
        try {
            (void)FieldSpec::parse(text);
            return {};
        } catch (const std::exception& e) {
            return e.what();
        }
    };

    std::string path, field = "rat", format = "text", mode = "auto", output, family;
    std::optional<int> max_level;
    std::optional<std::uint64_t> seed;
    std::vector<int> params;
    int r = 0;
    bool serial = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full report on a facet file");
    analyze_cmd->add_option("file", path, "Facet file")->required();
    analyze_cmd->add_option("--field", field, "rat, gf2 or gf:<p>")->check(field_check);
    analyze_cmd->add_option("--max-r", max_level, "Highest stackedness level to test (default (dim+1)/2)")
        ->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--serial", serial, "Use the serial kernels");

    auto* generate_cmd = app.add_subcommand("generate", "Write a generated complex as a facet file");
    generate_cmd->add_option("family", family, "Family name")->required()->check(CLI::IsMember(family_names()));
    generate_cmd->add_option("params", params, "Integer parameters");
    generate_cmd->add_option("--seed", seed, "Seed for stacked-sphere");
    generate_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* check_cmd = app.add_subcommand("check-stacked", "Exit 0 if stacked, 1 if not, 2 on error");
    check_cmd->add_option("file", path, "Facet file")->required();
    check_cmd->add_option("--r", r, "Theorem index r; tests (r-1)-stackedness")->required();
    check_cmd->add_option("--mode", mode, "auto, closed or with-boundary")
        ->check(CLI::IsMember({"auto", "closed", "with-boundary"}));
    check_cmd->add_option("--field", field, "rat, gf2 or gf:<p>")->check(field_check);

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Write Δ(r) as a facet file");
    reconstruct_cmd->add_option("file", path, "Facet file")->required();
    reconstruct_cmd->add_option("--r", r, "r")->required()->check(CLI::NonNegativeNumber);
    reconstruct_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* boundary_cmd = app.add_subcommand("boundary", "Write the boundary complex as a facet file");
    boundary_cmd->add_option("file", path, "Facet file")->required();
    boundary_cmd->add_option("--field", field, "rat, gf2 or gf:<p>")->check(field_check);
    boundary_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(path, field, max_level, format, serial);
        if (generate_cmd->parsed()) return run_generate(family, params, seed, output);
        if (check_cmd->parsed()) return run_check_stacked(path, r, mode, field);
        if (reconstruct_cmd->parsed()) return run_reconstruct(path, r, output);
        if (boundary_cmd->parsed()) return run_boundary(path, field, output);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: size guard: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
