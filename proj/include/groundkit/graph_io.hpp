#pragma once

#include <string>
#include <string_view>

#include "groundkit/digraph.hpp"

namespace groundkit {

// Arc-list text format, UTF-8, one record per line:
//   u_label <TAB> v_label <TAB> tag      arc with one or more tags (comma-joined)
//   u_label <TAB> v_label                untagged arc
//   u_label                              isolated vertex
// `#` starts a comment line; blank lines are skipped. Duplicate arc lines
// merge under set semantics (tags union).
struct LoadedGraph {
  Digraph graph;
  ArcAnnotations annotations;
};

LoadedGraph read_arc_list(std::string_view text);
LoadedGraph read_arc_list_file(const std::string& path);

std::string write_arc_list(const Digraph& g, const ArcAnnotations* annotations = nullptr);
void write_arc_list_file(const std::string& path, const Digraph& g,
                         const ArcAnnotations* annotations = nullptr);

// Annotations alone, in the same format (the preserved-relation sidecar).
std::string write_annotation_list(const ArcAnnotations& annotations);

// GraphViz export: quoted vertex labels; arc tags become edge labels.
std::string write_dot(const Digraph& g, const ArcAnnotations* annotations = nullptr);

std::string read_text_file(const std::string& path);  // IoError on failure
void write_text_file(const std::string& path, std::string_view content);

}  // namespace groundkit
