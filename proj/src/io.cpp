#include "algdist/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <set>
#include <utility>

namespace algdist {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

MatrixMarketGraph parse_matrix_market(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
  ++lineno;

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError(source, lineno, "missing %%MatrixMarket banner");
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw ParseError(source, lineno, "object must be 'matrix'");
  if (format != "coordinate") throw ParseError(source, lineno, "only coordinate format is supported");
  if (field != "real" && field != "integer" && field != "pattern" && field != "double") {
    throw ParseError(source, lineno, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric") {
    throw ParseError(source, lineno, "unsupported symmetry '" + symmetry + "'");
  }
  const bool pattern = field == "pattern";
  const bool general = symmetry == "general";

  long long rows = -1, cols = -1, entries = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> entries) || rows < 0 || cols < 0 || entries < 0) {
      throw ParseError(source, lineno, "malformed size line");
    }
    break;
  }
  if (rows < 0) throw ParseError(source, lineno, "missing size line");
  if (rows != cols) throw ParseError(source, lineno, "matrix must be square");

  std::vector<WeightedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> pattern_edges;
  long long diagonal = 0, negative = 0, seen = 0;
  while (seen < entries && std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double value = 1.0;
    if (!(entry >> i >> j)) throw ParseError(source, lineno, "malformed entry");
    if (!pattern && !(entry >> value)) throw ParseError(source, lineno, "missing entry value");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(source, lineno, "entry index out of range");
    }
    if (!std::isfinite(value)) throw ParseError(source, lineno, "non-finite entry value");
    ++seen;
    if (i == j) {
      ++diagonal;
      continue;
    }
    if (value < 0.0) {
      ++negative;
      value = -value;
    }
    const auto u = static_cast<VertexId>(i - 1);
    const auto v = static_cast<VertexId>(j - 1);
    if (pattern) {
      pattern_edges.emplace(std::min(u, v), std::max(u, v));
    } else {
      edges.push_back({u, v, general ? 0.5 * value : value});
    }
  }
  if (seen < entries) {
    throw ParseError(source, lineno, "expected " + std::to_string(entries) + " entries, found " +
                                         std::to_string(seen));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] != '%' && !is_blank(line)) {
      throw ParseError(source, lineno, "more entries than declared");
    }
  }
  for (const auto& [u, v] : pattern_edges) edges.push_back({u, v, 1.0});

  MatrixMarketGraph out;
  out.graph = Graph::from_edges(static_cast<VertexId>(rows), edges);
  if (diagonal > 0) {
    out.warnings.push_back("dropped " + std::to_string(diagonal) + " diagonal entries");
  }
  if (negative > 0) {
    out.warnings.push_back("replaced " + std::to_string(negative) +
                           " negative entries by their absolute values");
  }
  if (general && !pattern) out.warnings.push_back("symmetrized general matrix as (|A| + |A|^T) / 2");
  return out;
}

MatrixMarketGraph read_matrix_market(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_matrix_market(in, path.string());
}

void write_matrix_market(std::ostream& out, const Graph& g) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) {
    out << e.v + 1 << ' ' << e.u + 1 << ' ' << format_double(e.weight) << '\n';
  }
}

HgrFile parse_hgr(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '%') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(source, 1, "empty file");
  std::istringstream header(line);
  long long num_edges = -1, num_vertices = -1;
  int fmt = 0;
  if (!(header >> num_edges >> num_vertices) || num_edges < 0 || num_vertices < 0) {
    throw ParseError(source, lineno, "malformed header");
  }
  if (!(header >> fmt)) fmt = 0;
  if (fmt != 0 && fmt != 1) {
    throw ParseError(source, lineno, "unsupported fmt " + std::to_string(fmt) +
                                         " (vertex weights are not supported)");
  }

  std::vector<std::vector<VertexId>> pins;
  std::vector<double> weights;
  pins.reserve(static_cast<std::size_t>(num_edges));
  for (long long e = 0; e < num_edges; ++e) {
    if (!next_line()) {
      throw ParseError(source, lineno + 1, "expected " + std::to_string(num_edges) +
                                               " hyperedges, found " + std::to_string(e));
    }
    std::istringstream row(line);
    double w = 1.0;
    if (fmt == 1 && !(row >> w)) throw ParseError(source, lineno, "missing hyperedge weight");
    if (!std::isfinite(w) || w < 0.0) throw ParseError(source, lineno, "invalid hyperedge weight");
    std::vector<VertexId> h;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > num_vertices) throw ParseError(source, lineno, "vertex id out of range");
      h.push_back(static_cast<VertexId>(v - 1));
    }
    if (!row.eof()) throw ParseError(source, lineno, "malformed hyperedge line");
    if (h.empty()) throw ParseError(source, lineno, "empty hyperedge");
    std::vector<VertexId> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(source, lineno, "repeated vertex in hyperedge");
    }
    pins.push_back(std::move(h));
    weights.push_back(w);
  }
  while (next_line()) {
    if (!is_blank(line)) throw ParseError(source, lineno, "more hyperedges than declared");
  }
  return {Hypergraph(static_cast<VertexId>(num_vertices), std::move(pins), std::move(weights)),
          fmt == 1};
}

HgrFile read_hgr(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_hgr(in, path.string());
}

void write_hgr(std::ostream& out, const Hypergraph& h, bool weighted) {
  out << h.num_hyperedges() << ' ' << h.num_vertices();
  if (weighted) out << " 1";
  out << '\n';
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    bool first = true;
    if (weighted) {
      const double w = h.weight(e);
      if (w != std::floor(w)) {
        throw std::invalid_argument("hMetis weights must be integers; scale them first");
      }
      out << static_cast<long long>(w);
      first = false;
    }
    for (VertexId v : h.pins(e)) {
      if (!first) out << ' ';
      out << v + 1;
      first = false;
    }
    out << '\n';
  }
}

void write_hgr(std::ostream& out, const Hypergraph& h, std::span<const long long> weights) {
  if (weights.size() != h.num_hyperedges()) throw std::invalid_argument("weight count mismatch");
  out << h.num_hyperedges() << ' ' << h.num_vertices() << " 1\n";
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    out << weights[e];
    for (VertexId v : h.pins(e)) out << ' ' << v + 1;
    out << '\n';
  }
}

std::vector<long long> integer_weights(std::span<const double> weights) {
  constexpr double kMax = 1e6;
  std::vector<long long> out(weights.size(), 1);
  if (weights.empty()) return out;
  const bool already_integral = std::all_of(weights.begin(), weights.end(), [&](double w) {
    return w >= 1.0 && w <= kMax && w == std::floor(w);
  });
  if (already_integral) {
    std::transform(weights.begin(), weights.end(), out.begin(),
                   [](double w) { return static_cast<long long>(w); });
    return out;
  }
  const double top = *std::max_element(weights.begin(), weights.end());
  if (!(top > 0.0) || !std::isfinite(top)) return out;
  std::transform(weights.begin(), weights.end(), out.begin(), [&](double w) {
    return std::max(1LL, std::llround(w / top * kMax));
  });
  return out;
}

std::vector<int> read_partition_file(const std::filesystem::path& path, std::size_t expected) {
  auto in = open_input(path);
  std::vector<int> parts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::istringstream row(line);
    int p = 0;
    std::string rest;
    if (!(row >> p) || (row >> rest)) throw ParseError(path.string(), lineno, "malformed part id");
    parts.push_back(p);
  }
  if (parts.size() != expected) {
    throw ParseError(path.string(), lineno, "expected " + std::to_string(expected) +
                                                " part ids, found " + std::to_string(parts.size()));
  }
  return parts;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace algdist
