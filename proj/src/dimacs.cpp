#include "hopdom/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hopdom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Graph read_dimacs(std::string_view text) {
  Graph g;
  bool have_header = false;
  long long declared_edges = 0;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == 'c') {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "p") {
      long long n = 0;
      if (have_header || tok.size() != 4 || tok[1] != "edge" || !parse_int(tok[2], n) ||
          !parse_int(tok[3], declared_edges) || n < 0 || declared_edges < 0 || n > (1 << 24))
        throw DimacsError(DimacsErrorKind::MalformedLine, lineno, "bad problem line");
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw DimacsError(DimacsErrorKind::MissingHeader, lineno, "edge before header");
      long long a = 0;
      long long b = 0;
      if (tok.size() != 3 || !parse_int(tok[1], a) || !parse_int(tok[2], b))
        throw DimacsError(DimacsErrorKind::MalformedLine, lineno, "bad edge line");
      if (a < 1 || b < 1 || a > g.order() || b > g.order())
        throw DimacsError(DimacsErrorKind::VertexOutOfRange, lineno, "vertex id out of range");
      if (a == b) throw DimacsError(DimacsErrorKind::SelfLoop, lineno, "self-loop");
      Vertex u = static_cast<Vertex>(a - 1);
      Vertex v = static_cast<Vertex>(b - 1);
      if (g.adjacent(u, v)) throw DimacsError(DimacsErrorKind::DuplicateEdge, lineno, "duplicate edge");
      g.add_edge(u, v);
    } else {
      throw DimacsError(DimacsErrorKind::MalformedLine, lineno, "unknown line type");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw DimacsError(DimacsErrorKind::MissingHeader, lineno, "missing 'p edge' header");
  if (static_cast<long long>(g.size()) != declared_edges)
    throw DimacsError(DimacsErrorKind::EdgeCountMismatch, lineno,
                      "header declares " + std::to_string(declared_edges) + " edges, found " +
                          std::to_string(g.size()));
  return g;
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_dimacs_file(const std::string& path) { return read_dimacs(read_text_file(path)); }

}  // namespace hopdom
