#include "secpath/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace secpath {

namespace {

// Splits text into lines with comments stripped, keeping 1-based numbers.
struct Line {
  std::size_t number;
  std::string_view body;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::optional<long> to_long(std::string_view tok) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

int int_field(std::size_t line, std::string_view tok, const char* what, long min_value) {
  const auto v = to_long(tok);
  if (!v) throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + std::string(tok) + "'");
  if (*v < min_value || *v > std::numeric_limits<int>::max())
    throw ParseError(line, std::string(what) + " out of range: " + std::string(tok));
  return static_cast<int>(*v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");

  const auto header = tokens(lines[0].body);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
  const int n = int_field(lines[0].number, header[0], "vertex count", 0);
  const int m = int_field(lines[0].number, header[1], "edge count", 0);

  std::vector<Edge> edges;
  std::vector<std::size_t> line_of;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto tok = tokens(ln.body);
    if (tok.size() != 2) throw ParseError(ln.number, "edge line must be 'u v'");
    const int u = int_field(ln.number, tok[0], "endpoint", 0);
    const int v = int_field(ln.number, tok[1], "endpoint", 0);
    edges.push_back({u, v});
    line_of.push_back(ln.number);
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " edges, found " +
                                              std::to_string(edges.size()));
  try {
    return build_graph(n, edges);
  } catch (const GraphError& e) {
    const std::size_t at = e.edge_index() < line_of.size() ? line_of[e.edge_index()] : lines[0].number;
    throw ParseError(at, e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

ProblemInstance InstanceDescriptor::bind(std::shared_ptr<const Graph> g) const {
  if (terminals) return ProblemInstance::st_instance(std::move(g), variant, k, l, terminals->s, terminals->t);
  return ProblemInstance::free_instance(std::move(g), variant, k, l);
}

InstanceDescriptor InstanceDescriptor::of(const ProblemInstance& inst) {
  return {inst.variant(), inst.k(), inst.l(), inst.terminals()};
}

InstanceDescriptor parse_instance(std::string_view text) {
  InstanceDescriptor desc;
  bool have_variant = false, have_k = false, have_l = false, st = false;
  std::optional<int> s, t;
  std::size_t last_line = 1;

  for (const auto& ln : content_lines(text)) {
    last_line = ln.number;
    const auto eq = ln.body.find('=');
    if (eq == std::string_view::npos) throw ParseError(ln.number, "expected key=value");
    const auto key = trim(ln.body.substr(0, eq));
    const auto value = trim(ln.body.substr(eq + 1));
    if (key == "variant") {
      const auto v = parse_variant(value);
      if (!v) throw ParseError(ln.number, "unknown variant '" + std::string(value) + "'");
      desc.variant = *v;
      have_variant = true;
    } else if (key == "st") {
      if (value == "1" || value == "true") st = true;
      else if (value == "0" || value == "false") st = false;
      else throw ParseError(ln.number, "st must be 0, 1, true or false");
    } else if (key == "k") {
      desc.k = int_field(ln.number, value, "k", std::numeric_limits<int>::min());
      have_k = true;
    } else if (key == "l") {
      desc.l = int_field(ln.number, value, "l", std::numeric_limits<int>::min());
      have_l = true;
    } else if (key == "s") {
      s = int_field(ln.number, value, "s", std::numeric_limits<int>::min());
    } else if (key == "t") {
      t = int_field(ln.number, value, "t", std::numeric_limits<int>::min());
    } else {
      throw ParseError(ln.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_variant || !have_k || !have_l) throw ParseError(last_line, "instance needs variant, k and l");
  if (st != s.has_value() || st != t.has_value())
    throw ParseError(last_line, "s and t must be given exactly when st is set");
  if (st) desc.terminals = Terminals{*s, *t};
  return desc;
}

void write_instance(std::ostream& out, const InstanceDescriptor& desc) {
  out << "variant=" << to_string(desc.variant) << '\n'
      << "st=" << (desc.terminals ? 1 : 0) << '\n'
      << "k=" << desc.k << '\n'
      << "l=" << desc.l << '\n';
  if (desc.terminals) out << "s=" << desc.terminals->s << '\n' << "t=" << desc.terminals->t << '\n';
}

PathCertificate parse_certificate(std::string_view text) {
  PathCertificate cert;
  for (const auto& ln : content_lines(text))
    for (auto tok : tokens(ln.body)) cert.vertices.push_back(int_field(ln.number, tok, "vertex", std::numeric_limits<int>::min()));
  return cert;
}

void write_certificate(std::ostream& out, const PathCertificate& cert) {
  for (std::size_t i = 0; i < cert.vertices.size(); ++i) out << (i ? " " : "") << cert.vertices[i];
  out << '\n';
}

GroupList parse_groups(std::string_view text) {
  GroupList groups;
  for (const auto& ln : content_lines(text)) {
    const auto colon = ln.body.rfind(':');
    if (colon == std::string_view::npos) throw ParseError(ln.number, "expected '<name>: v1 v2 ...'");
    std::vector<Vertex> members;
    for (auto tok : tokens(ln.body.substr(colon + 1))) members.push_back(int_field(ln.number, tok, "vertex", 0));
    groups.emplace_back(std::string(trim(ln.body.substr(0, colon))), VertexSet(std::move(members)));
  }
  return groups;
}

void write_groups(std::ostream& out, const GroupList& groups) {
  for (const auto& [name, set] : groups) {
    out << name << ':';
    for (Vertex v : set) out << ' ' << v;
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace secpath
