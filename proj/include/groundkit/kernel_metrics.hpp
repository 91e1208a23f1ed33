#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groundkit/digraph.hpp"

namespace groundkit {

struct KernelResult {
  Digraph kernel;
  std::uint64_t nb_undefined = 0;   // trimmed with in-degree 0 (nothing defines them)
  std::uint64_t nb_undefining = 0;  // trimmed with out-degree 0 (they define nothing)
};

// Fixed-point trim: each pass removes every vertex of in-degree 0, then
// every vertex of out-degree 0, until a pass removes nothing. Self-loops
// count toward both degrees, so looped vertices survive. A vertex isolated
// at trim time counts as undefined (the in-phase sees it first).
KernelResult kernel(const Digraph& g);

struct MetricsReport {
  std::uint64_t nb_vertices = 0;
  std::uint64_t size_kernel = 0;
  std::uint64_t size_reduced_kernel = 0;
  std::uint64_t nc_reduced_kernel = 0;
  std::uint64_t init_nb_arcs = 0;
  std::uint64_t final_nb_arcs = 0;
  std::uint64_t nc_final_arcs = 0;
  std::uint64_t nb_undefined = 0;
  std::uint64_t nb_undefining = 0;
  std::uint64_t nb_sccs_kernel = 0;
  std::uint64_t kernel_nb_arcs = 0;
  double kernel_density = 0.0;  // arcs / (n * (n-1)); 0 when n <= 1
};

// Assembles the summary row for one graph from its kernel and the two
// reduction outcomes (confluent and non-confluent).
MetricsReport metrics(const Digraph& g, const KernelResult& kernel_result,
                      const Digraph& reduced_confluent, const Digraph& reduced_nonconfluent);

// Sorted intersection of the vertex-label sets.
std::vector<std::string> common_symbols(const std::vector<const Digraph*>& graphs);

std::string metrics_table(const MetricsReport& m);  // aligned two-column text
std::string metrics_csv(const MetricsReport& m);
std::string format_density(double density);         // fixed, 4 decimals

}  // namespace groundkit
