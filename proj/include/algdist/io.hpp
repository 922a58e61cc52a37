#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "algdist/graph.hpp"

namespace algdist {

/// Malformed input file; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MatrixMarketGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Reads a square coordinate Matrix Market file as an undirected graph.
///
/// Pattern entries get weight 1 and negative values are replaced by their
/// absolute value. Diagonal entries are dropped. General matrices are
/// symmetrized as (|A| + |A|^T) / 2; symmetric ones mirror their stored
/// triangle. Every conversion is reported in `warnings`.
MatrixMarketGraph parse_matrix_market(std::istream& in, const std::string& source = "<stream>");
MatrixMarketGraph read_matrix_market(const std::filesystem::path& path);

/// Writes g as a symmetric real coordinate file (lower triangle, 1-based).
void write_matrix_market(std::ostream& out, const Graph& g);

struct HgrFile {
  Hypergraph hypergraph;
  bool weighted = false;  // fmt 1
};

/// Reads an hMetis .hgr file (fmt 0 or 1). Lines starting with '%' are
/// comments.
HgrFile parse_hgr(std::istream& in, const std::string& source = "<stream>");
HgrFile read_hgr(const std::filesystem::path& path);

/// Writes the hMetis text form. Weighted output requires integral weights.
void write_hgr(std::ostream& out, const Hypergraph& h, bool weighted = true);

/// Writes h with the given integer hyperedge weights (fmt 1).
void write_hgr(std::ostream& out, const Hypergraph& h, std::span<const long long> weights);

/// Maps positive real weights to integers in [1, 10^6] preserving order.
/// Weights that are already integers in range are passed through; otherwise
/// they are scaled by 10^6 / max and rounded (clamped to at least 1).
std::vector<long long> integer_weights(std::span<const double> weights);

/// Reads one part id per line.
std::vector<int> read_partition_file(const std::filesystem::path& path, std::size_t expected);

/// Shortest round-trip decimal form of a double ("inf", "nan" for specials).
std::string format_double(double value);

}  // namespace algdist
