#include "cheegerlab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> parse_index(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<int> header_n;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_line;
  int max_index = -1;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (header_n || !edges.empty()) {
        throw Error::at_line(ErrorCode::ParseError, line_no, "header must appear once, before any edge");
      }
      auto n = parse_index(tokens[1]);
      if (!n || *n == 0) throw Error::at_line(ErrorCode::ParseError, line_no, "bad vertex count");
      header_n = *n;
      continue;
    }
    if (tokens.size() != 2) {
      throw Error::at_line(ErrorCode::ParseError, line_no, "expected two vertex indices, got \"" +
                                                              std::string(line) + "\"");
    }
    auto u = parse_index(tokens[0]);
    auto v = parse_index(tokens[1]);
    if (!u || !v) {
      throw Error::at_line(ErrorCode::ParseError, line_no, "vertex indices must be non-negative integers");
    }
    if (*u == *v) throw Error::at_line(ErrorCode::LoopEdge, line_no, "vertex " + std::to_string(*u));
    if (header_n && (*u >= *header_n || *v >= *header_n)) {
      throw Error::at_line(ErrorCode::IndexOutOfRange, line_no,
                           "edge outside 0.." + std::to_string(*header_n - 1));
    }
    Edge key = *u < *v ? Edge{*u, *v} : Edge{*v, *u};
    auto [it, inserted] = first_line.emplace(key, line_no);
    if (!inserted) {
      throw Error::at_line(ErrorCode::DuplicateEdge, line_no,
                           "edge (" + std::to_string(key.u) + "," + std::to_string(key.v) +
                               ") already given at line " + std::to_string(it->second));
    }
    edges.push_back({*u, *v});
    max_index = std::max({max_index, *u, *v});
  }

  if (edges.empty()) throw Error(ErrorCode::ParseError, "no edges in input");
  const int n = header_n.value_or(max_index + 1);
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  write_edge_list(out, g, comments);
  return out.str();
}

}  // namespace cheegerlab
