#include "groundkit/kernel_metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace groundkit {

KernelResult kernel(const Digraph& g) {
  KernelResult result{g, 0, 0};
  Digraph& k = result.kernel;
  for (;;) {
    std::vector<VertexId> undefined;
    for (VertexId u : k.vertices())
      if (k.in_degree(u) == 0) undefined.push_back(u);
    for (VertexId u : undefined) k.remove_vertex(u);
    result.nb_undefined += undefined.size();

    std::vector<VertexId> undefining;
    for (VertexId u : k.vertices())
      if (k.out_degree(u) == 0) undefining.push_back(u);
    for (VertexId u : undefining) k.remove_vertex(u);
    result.nb_undefining += undefining.size();

    if (undefined.empty() && undefining.empty()) break;
  }
  return result;
}

MetricsReport metrics(const Digraph& g, const KernelResult& kernel_result,
                      const Digraph& reduced_confluent, const Digraph& reduced_nonconfluent) {
  MetricsReport m;
  m.nb_vertices = g.vertex_count();
  m.init_nb_arcs = g.arc_count();
  m.size_kernel = kernel_result.kernel.vertex_count();
  m.kernel_nb_arcs = kernel_result.kernel.arc_count();
  m.nb_undefined = kernel_result.nb_undefined;
  m.nb_undefining = kernel_result.nb_undefining;
  m.nb_sccs_kernel = kernel_result.kernel.strongly_connected_components().size();
  m.size_reduced_kernel = reduced_confluent.vertex_count();
  m.final_nb_arcs = reduced_confluent.arc_count();
  m.nc_reduced_kernel = reduced_nonconfluent.vertex_count();
  m.nc_final_arcs = reduced_nonconfluent.arc_count();
  if (m.size_kernel > 1) {
    m.kernel_density = static_cast<double>(m.kernel_nb_arcs) /
                       (static_cast<double>(m.size_kernel) *
                        static_cast<double>(m.size_kernel - 1));
  }
  return m;
}

std::vector<std::string> common_symbols(const std::vector<const Digraph*>& graphs) {
  if (graphs.empty()) return {};
  std::set<std::string> acc;
  for (const std::string& l : graphs.front()->vertex_labels()) acc.insert(l);
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    std::set<std::string> next;
    for (const std::string& l : graphs[i]->vertex_labels())
      if (acc.count(l)) next.insert(l);
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

std::string format_density(double density) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", density);
  return buf;
}

namespace {

struct Row {
  const char* name;
  std::string value;
};

std::vector<Row> rows(const MetricsReport& m) {
  return {
      {"Nb vertices", std::to_string(m.nb_vertices)},
      {"Size Kernel", std::to_string(m.size_kernel)},
      {"Size Red. Ker.", std::to_string(m.size_reduced_kernel)},
      {"NC Red Ker.", std::to_string(m.nc_reduced_kernel)},
      {"Init. Nb Arcs", std::to_string(m.init_nb_arcs)},
      {"Final Nb Arcs", std::to_string(m.final_nb_arcs)},
      {"NC Final Arcs", std::to_string(m.nc_final_arcs)},
      {"Nb Undefined", std::to_string(m.nb_undefined)},
      {"Nb Undefining", std::to_string(m.nb_undefining)},
      {"Nb SCCs Kernel", std::to_string(m.nb_sccs_kernel)},
      {"Kernel Nb Arcs", std::to_string(m.kernel_nb_arcs)},
      {"Kernel Density", format_density(m.kernel_density)},
  };
}

}  // namespace

std::string metrics_table(const MetricsReport& m) {
  auto rs = rows(m);
  std::size_t name_w = 0, value_w = 0;
  for (const Row& r : rs) {
    name_w = std::max(name_w, std::string(r.name).size());
    value_w = std::max(value_w, r.value.size());
  }
  std::string out;
  for (const Row& r : rs) {
    std::string name(r.name);
    out += name;
    out.append(name_w - name.size() + 2, ' ');
    out.append(value_w - r.value.size(), ' ');
    out += r.value;
    out.push_back('\n');
  }
  return out;
}

std::string metrics_csv(const MetricsReport& m) {
  auto rs = rows(m);
  std::string header, values;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) {
      header.push_back(',');
      values.push_back(',');
    }
    header += rs[i].name;
    values += rs[i].value;
  }
  return header + "\n" + values + "\n";
}

}  // namespace groundkit
