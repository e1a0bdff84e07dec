#include "sandpile/textio.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace sandpile {

namespace {

std::string strip_comment(const std::string& line)
{
    return line.substr(0, line.find('#'));
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;)
        out.push_back(tok);
    return out;
}

std::uint64_t parse_count(const std::string& tok, std::size_t line_no, const char* what)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " must be a nonnegative integer, got '"
                         + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " out of range");
    }
}

} // namespace

Multigraph parse_edge_list(std::istream& in)
{
    std::optional<std::uint64_t> declared;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> edges;
    std::uint64_t max_id = 0;
    bool any_vertex = false;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        const auto toks = tokens(strip_comment(line));
        if (toks.empty())
            continue;
        if (toks[0] == "vertices") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'vertices N'");
            if (declared)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate 'vertices' header");
            declared = parse_count(toks[1], line_no, "vertex count");
            continue;
        }
        if (toks.size() < 2 || toks.size() > 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [multiplicity]'");
        const auto u = parse_count(toks[0], line_no, "vertex id");
        const auto v = parse_count(toks[1], line_no, "vertex id");
        const auto mult = toks.size() == 3 ? parse_count(toks[2], line_no, "multiplicity") : 1;
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        if (mult == 0)
            throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be positive");
        max_id = std::max({max_id, u, v});
        any_vertex = true;
        edges.emplace_back(u, v, mult);
    }
    std::uint64_t count = 0;
    if (declared) {
        count = *declared;
        if (any_vertex && max_id >= count)
            throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared vertex count "
                             + std::to_string(count));
    } else if (any_vertex) {
        count = max_id + 1;
    }
    if (count == 0)
        throw ParseError("edge list describes no vertices");
    Multigraph g(count);
    for (const auto& [u, v, mult] : edges)
        g.add_edge(u, v, mult);
    return g;
}

IntegerMatrix parse_matrix(std::istream& in)
{
    std::vector<std::string> toks;
    std::string line;
    std::size_t header_line = 0;
    std::vector<std::size_t> token_line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no)
        for (auto& tok : tokens(strip_comment(line))) {
            if (toks.empty())
                header_line = line_no;
            toks.push_back(std::move(tok));
            token_line.push_back(line_no);
        }
    if (toks.size() < 2)
        throw ParseError("matrix file needs a 'rows cols' header");
    const auto rows = parse_count(toks[0], header_line, "row count");
    const auto cols = parse_count(toks[1], header_line, "column count");
    if (rows == 0 || cols == 0)
        throw ParseError("line " + std::to_string(header_line) + ": matrix dimensions must be positive");
    if (toks.size() - 2 != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(toks.size() - 2));
    IntegerMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        try {
            m(k / cols, k % cols) = parse_integer(toks[k + 2]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError("line " + std::to_string(token_line[k + 2]) + ": " + ex.what());
        }
    }
    return m;
}

Multigraph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

IntegerMatrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_matrix(in);
}

} // namespace sandpile
