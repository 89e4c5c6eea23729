#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rstack/complex.hpp"

namespace rstack {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// One facet per line, whitespace-separated tokens, '#' starts a comment.
/// When every token is a positive integer the labels are used as vertices
/// directly and n is the largest label; otherwise tokens are numbered 1, 2,
/// ... in order of first appearance and `labels` records the mapping.
struct FacetFile {
    SimplicialComplex complex = SimplicialComplex::void_complex(0);
    std::vector<std::string> labels;  // labels[v-1] is the token of vertex v
    bool relabeled = false;
};

FacetFile parse_facets(std::istream& in, const std::string& source = "<input>");
FacetFile read_facet_file(const std::string& path);

/// Canonical form: vertices ascending within a line, facets sorted
/// lexicographically. The complex {∅} is written as a single comment line.
void write_facets(std::ostream& out, const SimplicialComplex& complex);
std::string facets_to_string(const SimplicialComplex& complex);
void write_facet_file(const std::string& path, const SimplicialComplex& complex);

}  // namespace rstack
