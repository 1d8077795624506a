#include "io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bcube::cli {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank lines, '#' starts a comment.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

double to_double(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(v)) throw ParseError(line, "expected a finite number, got '" + tok + "'");
  return v;
}

int to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return static_cast<int>(v);
}

int hex_digit(char c, int line) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw ParseError(line, std::string("invalid hex digit '") + c + "'");
}

std::vector<Line> require_header(const std::string& text, const char* what) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, std::string("empty ") + what + " file");
  return lines;
}

template <class Edge>
Edge parse_edge(const Line& line, int n) {
  Edge e = 0;
  int prev = 0;
  for (const auto& tok : line.tokens) {
    const int v = to_int(tok, line.number);
    if (v < 1 || v > n) throw ParseError(line.number, "vertex " + tok + " outside 1.." + std::to_string(n));
    if (v <= prev) throw ParseError(line.number, "vertices must be strictly increasing");
    prev = v;
    e |= Edge{1} << (v - 1);
  }
  return e;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ": " + what) {}

BiasedFunction parse_function(const std::string& text) {
  const auto lines = require_header(text, "function");
  const Line& head = lines[0];
  if (head.tokens.size() != 2) throw ParseError(head.number, "header must be 'n p'");
  const int n = to_int(head.tokens[0], head.number);
  const double p = to_double(head.tokens[1], head.number);
  if (n < 0 || n > kMaxCubeDimension) throw ParseError(head.number, "n out of range");
  if (!(p > 0.0 && p < 1.0)) throw ParseError(head.number, "p must lie in (0,1)");
  const std::size_t size = std::size_t{1} << n;

  std::vector<std::pair<std::string, int>> body;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (const auto& tok : lines[i].tokens) body.emplace_back(tok, lines[i].number);

  std::vector<double> values(size, 0.0);
  if (body.size() == 1 && size > 1) {
    const auto& [hex, line] = body[0];
    const std::size_t digits = (size + 3) / 4;
    if (hex.size() != digits)
      throw ParseError(line, "hex truth table needs " + std::to_string(digits) + " digits, got " + std::to_string(hex.size()));
    for (std::size_t d = 0; d < digits; ++d) {
      const int nib = hex_digit(hex[digits - 1 - d], line);
      for (int b = 0; b < 4; ++b) {
        const std::size_t x = 4 * d + b;
        if (nib >> b & 1) {
          if (x >= size) throw ParseError(line, "hex truth table sets a bit beyond 2^n");
          values[x] = 1.0;
        }
      }
    }
  } else {
    if (body.size() != size)
      throw ParseError(body.empty() ? head.number : body.back().second,
                       "expected " + std::to_string(size) + " values, got " + std::to_string(body.size()));
    for (std::size_t x = 0; x < size; ++x) values[x] = to_double(body[x].first, body[x].second);
  }
  return BiasedFunction(n, Bias(p), std::move(values));
}

SetFamily parse_family(const std::string& text) {
  const auto lines = require_header(text, "family");
  const Line& head = lines[0];
  if (head.tokens.size() != 2) throw ParseError(head.number, "header must be 'n k'");
  const int n = to_int(head.tokens[0], head.number), k = to_int(head.tokens[1], head.number);
  if (n < 0 || n > kMaxGroundSet) throw ParseError(head.number, "n out of range [0,24]");
  if (k < 0 || k > n) throw ParseError(head.number, "k out of range [0,n]");
  std::vector<Mask> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Mask e = parse_edge<Mask>(lines[i], n);
    if (popcount(e) != k)
      throw ParseError(lines[i].number, "edge has " + std::to_string(popcount(e)) + " vertices, expected " + std::to_string(k));
    edges.push_back(e);
  }
  return SetFamily(n, k, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  const auto lines = require_header(text, "hypergraph");
  const Line& head = lines[0];
  if (head.tokens.empty() || head.tokens.size() > 2) throw ParseError(head.number, "header must be 'n' or 'n r'");
  const int n = to_int(head.tokens[0], head.number);
  const int r = head.tokens.size() == 2 ? to_int(head.tokens[1], head.number) : -1;
  if (n < 0 || n > 64) throw ParseError(head.number, "n out of range [0,64]");
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const VertexSet e = parse_edge<VertexSet>(lines[i], n);
    if (r >= 0 && static_cast<int>(lines[i].tokens.size()) != r)
      throw ParseError(lines[i].number, "edge size differs from the declared uniformity");
    for (VertexSet seen : edges)
      if (seen == e) throw ParseError(lines[i].number, "repeated edge");
    edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

std::vector<FiniteRV> parse_rvset(const std::string& text) {
  std::vector<FiniteRV> out;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() % 2 != 0) throw ParseError(line.number, "expected value/probability pairs");
    std::vector<double> values, probs;
    for (std::size_t i = 0; i < line.tokens.size(); i += 2) {
      values.push_back(to_double(line.tokens[i], line.number));
      probs.push_back(to_double(line.tokens[i + 1], line.number));
    }
    try {
      out.emplace_back(std::move(values), std::move(probs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (out.empty()) throw ParseError(1, "empty random-variable file");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_function(const BiasedFunction& f, bool hex) {
  std::ostringstream out;
  out << std::setprecision(17) << f.n() << ' ' << f.p() << '\n';
  if (hex && f.is_boolean() && f.n() >= 1) {
    const std::size_t digits = (f.size() + 3) / 4;
    static const char* kHex = "0123456789abcdef";
    std::string s(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      int nib = 0;
      for (int b = 0; b < 4; ++b)
        if (4 * d + b < f.size() && f[static_cast<Mask>(4 * d + b)] != 0.0) nib |= 1 << b;
      s[digits - 1 - d] = kHex[nib];
    }
    out << s << '\n';
  } else {
    for (std::size_t x = 0; x < f.size(); ++x) out << f[static_cast<Mask>(x)] << (x + 1 == f.size() ? '\n' : ' ');
  }
  return out.str();
}

std::string format_family(const SetFamily& f) {
  std::ostringstream out;
  out << f.n() << ' ' << f.k() << '\n';
  for (Mask e : f.edges()) {
    bool first = true;
    for (int v : mask_to_indices(e)) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (VertexSet e : g.edges()) {
    bool first = true;
    for (int v : vertex_list(e)) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph named_graph(const std::string& spec) {
  std::vector<std::string> parts;
  std::istringstream in(spec);
  for (std::string tok; std::getline(in, tok, ':');) parts.push_back(tok);
  auto arg = [&](std::size_t i, int fallback) {
    if (i < parts.size()) return to_int(parts[i], 1);
    if (fallback < 0) throw std::invalid_argument("graph spec '" + spec + "' is missing a parameter");
    return fallback;
  };
  if (parts.empty()) throw std::invalid_argument("empty graph spec");
  const std::string& kind = parts[0];
  if (kind == "matching") return Hypergraph::matching(arg(1, -1), arg(2, 2));
  if (kind == "path") return Hypergraph::path(arg(1, -1));
  if (kind == "cycle") return Hypergraph::cycle(arg(1, -1));
  if (kind == "complete") return Hypergraph::complete_graph(arg(1, -1));
  if (kind == "edge") return Hypergraph::single_edge(arg(1, 2));
  throw std::invalid_argument("unknown graph kind '" + kind + "' (matching, path, cycle, complete, edge)");
}

}  // namespace bcube::cli
