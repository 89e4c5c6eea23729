#include "rstack/facet_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rstack {

namespace {

bool positive_integer(const std::string& token, long& value) {
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc() && ptr == end && value >= 1;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

FacetFile parse_facets(std::istream& in, const std::string& source) {
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;
    std::string text;
    for (int line_no = 1; std::getline(in, text); ++line_no) {
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::istringstream tokens(text);
        std::vector<std::string> row;
        for (std::string token; tokens >> token;) {
            if (std::find(row.begin(), row.end(), token) != row.end())
                throw ParseError(source, line_no, "duplicate vertex '" + token + "'");
            row.push_back(std::move(token));
        }
        if (row.empty()) continue;
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }
    if (rows.empty()) throw ParseError(source, 0, "no facets");

    bool numeric = true;
    long max_label = 0;
    for (const auto& row : rows)
        for (const auto& token : row) {
            long value = 0;
            if (!positive_integer(token, value)) numeric = false;
            else max_label = std::max(max_label, value);
        }

    FacetFile out;
    std::unordered_map<std::string, Vertex> ids;
    if (numeric) {
        if (max_label > kMaxVertices)
            throw ParseError(source, 0, "vertex label " + std::to_string(max_label) + " exceeds the limit of " +
                                            std::to_string(kMaxVertices));
        for (long v = 1; v <= max_label; ++v) out.labels.push_back(std::to_string(v));
    } else {
        out.relabeled = true;
    }

    std::vector<Face> facets;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Face f;
        for (const auto& token : rows[r]) {
            Vertex v = 0;
            if (numeric) {
                v = std::stoi(token);
            } else {
                auto it = ids.find(token);
                if (it == ids.end()) {
                    if (static_cast<int>(out.labels.size()) == kMaxVertices)
                        throw ParseError(source, row_lines[r], "more than " + std::to_string(kMaxVertices) + " vertices");
                    out.labels.push_back(token);
                    it = ids.emplace(token, static_cast<Vertex>(out.labels.size())).first;
                }
                v = it->second;
            }
            f = f.with(v);
        }
        facets.push_back(f);
    }
    out.complex = SimplicialComplex::from_faces(static_cast<int>(out.labels.size()), std::move(facets));
    return out;
}

FacetFile read_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_facets(in, path);
}

void write_facets(std::ostream& out, const SimplicialComplex& complex) {
    if (complex.is_empty_complex()) {
        out << "# empty complex {}\n";
        return;
    }
    std::vector<Face> facets = complex.facets();
    std::sort(facets.begin(), facets.end(), lex_less);
    for (Face f : facets) {
        bool first = true;
        f.for_each_vertex([&](Vertex v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
}

std::string facets_to_string(const SimplicialComplex& complex) {
    std::ostringstream out;
    write_facets(out, complex);
    return out.str();
}

void write_facet_file(const std::string& path, const SimplicialComplex& complex) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_facets(out, complex);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace rstack
