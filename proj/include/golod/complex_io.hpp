#pragma once

#include <iosfwd>
#include <string>

#include "golod/complex.hpp"

namespace golod {

// Facet-list text format: first non-comment line `m=<int>`, then one facet
// per line as space-separated vertex labels; `#` starts a comment.  The JSON
// equivalent is {"m": int, "facets": [[int,...],...]} with an optional
// "names" array.  Parse errors carry 1-based line numbers.
SimplicialComplex parse_complex_text(const std::string& content);
SimplicialComplex parse_complex_json(const std::string& content);

// Auto-detects JSON (leading '{') vs text.
SimplicialComplex parse_complex(const std::string& content);
SimplicialComplex load_complex(const std::string& path);

std::string emit_complex_text(const SimplicialComplex& K, const std::string& header_comment = {});
std::string emit_complex_json(const SimplicialComplex& K);

}  // namespace golod
