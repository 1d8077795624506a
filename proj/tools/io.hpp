#pragma once

#include <string>
#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/hypergraph.hpp"
#include "biasedcube/rv_poly.hpp"
#include "biasedcube/set_family.hpp"

namespace bcube::cli {

// Parse errors carry a 1-based line number in the message.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what);
};

// "n p" then either 2^n reals in mask order or one hex string whose bit x is f(x).
BiasedFunction parse_function(const std::string& text);
// "n k" then one edge per line as increasing 1-based vertices.
SetFamily parse_family(const std::string& text);
// "n" (optionally "n r", r then checked for every edge) then one edge per line.
Hypergraph parse_hypergraph(const std::string& text);
// One variable per line: value prob value prob ...
std::vector<FiniteRV> parse_rvset(const std::string& text);

std::string read_file(const std::string& path);

// Inverse of parse_function; Boolean tables are written in hex when `hex` is set.
std::string format_function(const BiasedFunction& f, bool hex);
std::string format_family(const SetFamily& f);
std::string format_hypergraph(const Hypergraph& g);

// Named small graphs: matching:s[:r], path:l, cycle:l, complete:m, edge:r.
Hypergraph named_graph(const std::string& spec);

}  // namespace bcube::cli
