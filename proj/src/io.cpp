#include "pivd/io.hpp"

#include <sstream>

#include "pivd/error.hpp"

namespace pivd {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<Graph> parse_graphs(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  bool have_header = false;
  int n = 0, m = 0, seen_edges = 0, header_line = 0;
  std::vector<Edge> edges;

  auto flush = [&](int at_line) {
    if (!have_header) return;
    if (seen_edges != m)
      throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                           std::to_string(seen_edges),
                       at_line);
    out.push_back(Graph::build(n, std::move(edges)));
    edges.clear();
    have_header = false;
    seen_edges = 0;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("---", 0) == 0) {
      flush(lineno);
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      if (have_header) throw ParseError("unexpected second header (missing '---' separator?)", lineno);
      if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError("malformed header, want 'p <n> <m>'", lineno);
      have_header = true;
      header_line = lineno;
      edges.reserve(m);
    } else if (kind == "e") {
      if (!have_header) throw ParseError("edge line before 'p' header", lineno);
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line, want 'e <u> <v>'", lineno);
      try {
        if (u == v) throw InvalidArgument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("endpoint out of range");
      } catch (const InvalidArgument& err) {
        throw ParseError(std::string(err.what()) + " in edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")",
                         lineno);
      }
      edges.emplace_back(u, v);
      ++seen_edges;
    } else {
      throw ParseError("unrecognized line '" + line + "'", lineno);
    }
  }
  if (have_header && seen_edges != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(seen_edges),
                     header_line);
  flush(lineno);
  return out;
}

Graph parse_graph(const std::string& text) {
  auto graphs = parse_graphs(text);
  if (graphs.size() != 1)
    throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()), 0);
  return graphs.front();
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << " " << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

std::string format_graphs(const std::vector<Graph>& graphs) {
  std::ostringstream out;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << "---\n";
    out << format_graph(graphs[i]);
  }
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  v" << v;
    auto it = g.labels().find(v);
    if (it != g.labels().end()) out << " [label=\"" << v << ":" << it->second << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pivd
