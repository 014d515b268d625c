#include "compidx/digraph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "compidx/error.hpp"

namespace compidx {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
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

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a number, got '" + std::string(token) + "'");
  return value;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::size_t dot_vertex(std::string_view token, std::size_t line) {
  token = trim(token);
  if (token.size() < 2 || token.front() != 'v')
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a vertex name vK");
  return parse_number<std::size_t>(token.substr(1), line);
}

Digraph parse_dot(const std::vector<Line>& lines) {
  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::vector<int> parts;
  bool any_part = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [number, text] = lines[i];
    if (text == "}") break;
    if (text.back() != ';') throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": missing ';'");
    text = trim(text.substr(0, text.size() - 1));
    if (auto arrow = text.find("->"); arrow != std::string_view::npos) {
      arcs.emplace_back(dot_vertex(text.substr(0, arrow), number), dot_vertex(text.substr(arrow + 2), number));
      continue;
    }
    int part = -1;
    if (auto bracket = text.find('['); bracket != std::string_view::npos) {
      auto attrs = text.substr(bracket);
      auto eq = attrs.find("part=");
      auto close = attrs.find(']');
      if (eq == std::string_view::npos || close == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": unsupported vertex attributes");
      part = parse_number<int>(attrs.substr(eq + 5, close - eq - 5), number);
      any_part = true;
      text = text.substr(0, bracket);
    }
    const auto v = dot_vertex(text, number);
    if (v != n) throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": vertices must be declared v0, v1, ... in order");
    parts.push_back(part);
    ++n;
  }
  std::optional<Partition> partition;
  if (any_part) partition = parts;
  return Digraph::build(n, arcs, partition, partition.has_value());
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty digraph file");
  if (lines.front().text.find('{') != std::string_view::npos) return parse_dot(lines);

  auto header = split_ws(lines.front().text);
  if (header.size() != 2 || header[0] != "digraph")
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lines.front().number) + ": expected 'digraph <n>'");
  const auto n = parse_number<std::size_t>(header[1], lines.front().number);

  std::optional<Partition> partition;
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tokens = split_ws(lines[i].text);
    if (tokens.front() == "parts") {
      if (partition) throw Error(ErrorCode::ParseError, "line " + std::to_string(lines[i].number) + ": duplicate parts line");
      Partition p;
      for (std::size_t t = 1; t < tokens.size(); ++t) p.push_back(parse_number<int>(tokens[t], lines[i].number));
      partition = std::move(p);
      continue;
    }
    if (tokens.size() != 2)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lines[i].number) + ": expected '<u> <v>'");
    arcs.emplace_back(parse_number<std::size_t>(tokens[0], lines[i].number),
                      parse_number<std::size_t>(tokens[1], lines[i].number));
  }
  const bool multipartite = partition.has_value();
  return Digraph::build(n, arcs, std::move(partition), multipartite);
}

Digraph read_digraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph(buffer.str());
}

std::string to_text(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.vertex_count() << '\n';
  if (d.partition()) {
    out << "parts";
    for (int p : *d.partition()) out << ' ' << p;
    out << '\n';
  }
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void write_digraph(const std::filesystem::path& path, const Digraph& d) { write_text_file(path, to_text(d)); }

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    out << "  v" << v;
    if (d.partition()) out << " [part=" << d.part_of(v) << "]";
    out << ";\n";
  }
  for (auto [u, v] : d.arcs()) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace compidx
