#include "arbor/tree_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "arbor/error.hpp"
#include "arbor/prufer.hpp"

namespace arbor {
namespace {

std::vector<long long> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ||
                               line[i] == ',')) {
      ++i;
    }
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + i) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected an integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

Vertex as_vertex(long long value, std::size_t line_no) {
  if (value < 0 || value > 100'000'000) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": value out of range");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Tree read_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;
    if (n < 0 && (view.front() == 'P' || view.front() == 'p')) {
      view.remove_prefix(1);
      if (view.empty() || view.front() != ':') {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'P:'");
      }
      view.remove_prefix(1);
      PruferSequence code;
      for (long long a : parse_integers(view, line_no)) code.push_back(as_vertex(a, line_no));
      return prufer_decode(code, static_cast<Vertex>(code.size() + 2));
    }
    auto values = parse_integers(view, line_no);
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 1) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": first line must hold the vertex count");
      }
      n = as_vertex(values[0], line_no);
      continue;
    }
    if (values.size() != 2) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected an edge 'u v'");
    }
    edges.emplace_back(as_vertex(values[0], line_no), as_vertex(values[1], line_no));
  }
  if (n < 0) throw Error(ErrorCode::kParse, "empty tree description");
  return Tree::from_edges(static_cast<Vertex>(n), edges);
}

Tree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& t) {
  out << t.order() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  write_tree(out, t);
  return out.str();
}

std::string format_prufer_line(const Tree& t) {
  if (t.order() < 2) return "1";
  std::string out = "P:";
  for (Vertex a : prufer_encode(t)) out += ' ' + std::to_string(a);
  return out;
}

}  // namespace arbor
