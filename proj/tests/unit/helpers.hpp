#pragma once

#include <string>
#include <vector>

#include "evc/graph.hpp"

inline evc::Graph edge_list(const std::string& text) { return evc::parse_graph(text, evc::GraphFormat::edge_list); }

inline evc::VertexSet labels(const evc::Graph& g, const std::vector<std::string>& ls) { return g.labels_to_set(ls); }

inline evc::Graph p3() { return edge_list("a b\nb c"); }
inline evc::Graph c4() { return edge_list("a b\nb c\nc d\nd a"); }
inline evc::Graph c5() { return edge_list("a b\nb c\nc d\nd e\ne a"); }
inline evc::Graph c6() { return edge_list("a b\nb c\nc d\nd e\ne f\nf a"); }
inline evc::Graph k3() { return edge_list("a b\nb c\na c"); }
inline evc::Graph k4() { return edge_list("a b\na c\na d\nb c\nb d\nc d"); }
inline evc::Graph p4() { return edge_list("a b\nb c\nc d"); }
