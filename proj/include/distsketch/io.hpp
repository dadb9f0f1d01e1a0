#pragma once

#include <string>

#include "distsketch/graph.hpp"
#include "distsketch/hardness.hpp"
#include "distsketch/point_set.hpp"
#include "distsketch/sampling.hpp"

namespace distsketch {
namespace io {

/// Shortest decimal representation that round-trips exactly.
std::string format_double(double x);

/// One `u v w` triple per line, whitespace separated, 0-based ids,
/// `#` comments, optional leading `n m` header. Parallel edges keep the
/// minimum weight; self-loops are dropped.
Graph parse_edge_list(const std::string& text);

/// Same format with integer weights that may be negative.
hardness::SignedGraph parse_signed_edge_list(const std::string& text);

/// CSV coordinate rows, or matrix mode: `matrix n` then n rows of n reals.
PointSet parse_points(const std::string& text);

/// Header `sample k seed n`, then one `v p_v` pair per line.
WeightedSample parse_sample(const std::string& text);

std::string serialize_edge_list(const Graph& g);
std::string serialize_points(const PointSet& p);
std::string serialize_sample(const WeightedSample& s, int n);

std::string read_file(const std::string& path);

}  // namespace io
}  // namespace distsketch
