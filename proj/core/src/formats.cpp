#include "compnum/formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace compnum {
namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Max = 126;

std::size_t graph6_body_length(int n) {
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (pairs + 5) / 6;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
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

bool parse_int(std::string_view token, int& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int byte = static_cast<unsigned char>(text[i]);
    if (byte < kGraph6Bias || byte > kGraph6Max) {
      throw ParseError("graph6: byte " + std::to_string(byte) + " at offset " +
                           std::to_string(i) + " outside the printable range 63..126",
                       i);
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Bias;
  if (n > kMaxOrder) {
    throw ParseError("graph6: multi-byte header at offset 0 (graphs above " +
                         std::to_string(kMaxOrder) + " vertices are unsupported)",
                     0);
  }
  const std::size_t body = graph6_body_length(n);
  if (text.size() < 1 + body) {
    throw ParseError("graph6: truncated body, expected " + std::to_string(body) +
                         " bytes after the header at offset " + std::to_string(text.size()),
                     text.size());
  }
  if (text.size() > 1 + body) {
    throw ParseError("graph6: trailing data at offset " + std::to_string(1 + body), 1 + body);
  }

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int chunk = static_cast<unsigned char>(text[1 + bit / 6]) - kGraph6Bias;
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = body;
    const int chunk = static_cast<unsigned char>(text[last]) - kGraph6Bias;
    const int padding_mask = (1 << (6 - bit % 6)) - 1;
    if (chunk & padding_mask) {
      throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(last), last);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " unsupported");
  }
  std::string out(1 + graph6_body_length(n), static_cast<char>(kGraph6Bias));
  out[0] = static_cast<char>(kGraph6Bias + n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if (g.adjacent(u, v)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

Digraph parse_arc_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  Digraph d;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      int n = 0;
      if (tokens.size() != 2 || tokens[0] != "digraph" || !parse_int(tokens[1], n) || n < 0) {
        throw ParseError("arc list line " + std::to_string(line_no) +
                             ": expected header 'digraph <n>'",
                         line_no);
      }
      if (n > kMaxOrder) {
        throw ParseError("arc list line " + std::to_string(line_no) + ": order " +
                             std::to_string(n) + " exceeds " + std::to_string(kMaxOrder),
                         line_no);
      }
      d = Digraph(n);
      have_header = true;
      continue;
    }

    int tail = 0;
    int head = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], tail) || !parse_int(tokens[1], head)) {
      throw ParseError("arc list line " + std::to_string(line_no) + ": expected '<tail> <head>'",
                       line_no);
    }
    const auto where = "arc list line " + std::to_string(line_no) + ": ";
    if (tail < 0 || head < 0 || tail >= d.order() || head >= d.order()) {
      throw ParseError(where + "vertex out of range", line_no);
    }
    if (tail == head) throw ParseError(where + "loop " + std::to_string(tail), line_no);
    if (d.has_arc(tail, head)) throw ParseError(where + "duplicate arc", line_no);
    d.add_arc(tail, head);
  }
  if (!have_header) throw ParseError("arc list: missing 'digraph <n>' header", line_no);
  return d;
}

std::string write_arc_list(const Digraph& d, std::string_view comment) {
  std::ostringstream out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    std::size_t eol = comment.find('\n', pos);
    if (eol == std::string_view::npos) eol = comment.size();
    out << "# " << comment.substr(pos, eol - pos) << '\n';
    pos = eol + 1;
  }
  out << "digraph " << d.order() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string write_dot(const Digraph& d, int original_order) {
  auto name = [original_order](Vertex v) {
    return v < original_order ? std::to_string(v) : "z" + std::to_string(v - original_order + 1);
  };
  std::ostringstream out;
  out << "digraph witness {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out << "  \"" << name(v) << "\"";
    if (v >= original_order) out << " [shape=box]";
    out << ";\n";
  }
  for (const Arc& a : d.arcs()) {
    out << "  \"" << name(a.tail) << "\" -> \"" << name(a.head) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace compnum
