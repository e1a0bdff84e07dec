#pragma once

#include "sandpile/graph.hpp"
#include "sandpile/matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sandpile {

/// Malformed input text; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge list: `u v [multiplicity]` per line, `#` starts a comment, optional
/// `vertices N` header; otherwise the vertex count is 1 + the largest id.
Multigraph parse_edge_list(std::istream& in);

/// First line `rows cols`, then the entries in row-major order.
IntegerMatrix parse_matrix(std::istream& in);

Multigraph read_edge_list_file(const std::string& path);
IntegerMatrix read_matrix_file(const std::string& path);

} // namespace sandpile
