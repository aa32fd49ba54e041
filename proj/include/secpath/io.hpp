#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Graph text format: a header "n m", then m lines "u v" (written with
// u < v). '#' starts a comment that runs to the end of the line; blank lines
// are ignored.
Graph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);

// Instance text format: "key=value" lines with keys variant (ssp, lsp, sup,
// lup), st (0/1 or false/true), k, l, and s, t when st is set.
struct InstanceDescriptor {
  Variant variant = Variant::ssp;
  int k = 1;
  int l = 0;
  std::optional<Terminals> terminals;

  ProblemInstance bind(std::shared_ptr<const Graph> g) const;
  static InstanceDescriptor of(const ProblemInstance& inst);
};

InstanceDescriptor parse_instance(std::string_view text);
void write_instance(std::ostream& out, const InstanceDescriptor& desc);

// Certificate: whitespace-separated vertex ids in path order.
PathCertificate parse_certificate(std::string_view text);
void write_certificate(std::ostream& out, const PathCertificate& cert);

// Groups: one "<group-name>: v1 v2 ..." line per group.
using GroupList = std::vector<std::pair<std::string, VertexSet>>;
GroupList parse_groups(std::string_view text);
void write_groups(std::ostream& out, const GroupList& groups);

std::string read_file(const std::string& path);

}  // namespace secpath
