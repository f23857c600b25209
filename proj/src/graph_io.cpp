#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "falkkit/error.hpp"
#include "falkkit/gain_graph.hpp"

namespace falkkit {

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

int parse_int(std::string_view token, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GainGraph parse_graph(std::string_view text) {
  int num_vertices = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::map<EdgeId, std::size_t> id_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "graph") {
        throw ParseError(line_no, "expected 'graph <V>' header");
      }
      num_vertices = parse_int(tokens[1], line_no, "vertex count");
      if (num_vertices < 1) throw ParseError(line_no, "vertex count must be at least 1");
      have_header = true;
      continue;
    }

    if (tokens[0] != "edge" || tokens.size() != 5) {
      throw ParseError(line_no, "expected 'edge <id> <tail> <head> <gain>'");
    }
    Edge e;
    e.id = parse_int(tokens[1], line_no, "edge id");
    e.tail = parse_int(tokens[2], line_no, "tail vertex");
    e.head = parse_int(tokens[3], line_no, "head vertex");
    for (VertexId v : {e.tail, e.head}) {
      if (v < 1 || v > num_vertices) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(num_vertices));
      }
    }
    if (e.id < 1) throw ParseError(line_no, "edge id must be positive");
    if (auto [it, fresh] = id_line.emplace(e.id, line_no); !fresh) {
      throw ParseError(line_no, "duplicate edge id " + std::to_string(e.id) + " (first on line " +
                                    std::to_string(it->second) + ")");
    }
    try {
      e.gain = Gain::parse(tokens[4]);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
    edges.push_back(std::move(e));
  }

  if (!have_header) throw ParseError(0, "missing 'graph <V>' header");
  const auto n = static_cast<EdgeId>(edges.size());
  for (const auto& [id, line] : id_line) {
    if (id > n) {
      throw ParseError(line, "edge id " + std::to_string(id) + " breaks contiguity: ids must be exactly 1.." +
                                 std::to_string(n));
    }
  }
  return GainGraph(num_vertices, std::move(edges));
}

std::string serialize(const GainGraph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << ' ' << e.tail << ' ' << e.head << ' ' << e.gain.str() << '\n';
  }
  return out.str();
}

}  // namespace falkkit
