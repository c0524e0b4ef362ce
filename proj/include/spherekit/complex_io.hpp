#pragma once

#include <string>
#include <string_view>

#include "spherekit/complex.hpp"

namespace spherekit {

// JSON form:  {"vertices":["a","b",...],"facets":[["a","b"],...]}
// Text form:  one facet per line, labels separated by whitespace; '#' starts a
//             comment that runs to the end of the line.
// Writers emit the canonical form: labels sorted, facets sorted
// lexicographically by vertex index. Parsing canonical output reproduces the
// same bytes.

Complex parse_json_complex(std::string_view text);
Complex parse_text_complex(std::string_view text);
/// Dispatches on the first non-blank character ('{' selects JSON).
Complex parse_complex(std::string_view text);
Complex read_complex_file(const std::string& path);

std::string to_json(const Complex& complex);
std::string to_text(const Complex& complex);

}  // namespace spherekit
