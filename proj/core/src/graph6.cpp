#include "distidx/graph6.hpp"

#include <fstream>

namespace distidx {

namespace {

constexpr int kMaxGraph6Order = 62;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kTooLarge, "graph6 codec supports n <= 62");
  }
  std::string out(1, static_cast<char>(n + 63));
  int value = 0;
  int used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((value << (6 - used)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Error(ErrorCode::kBadEncoding, "empty graph6 line");
  for (char c : line) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Error(ErrorCode::kBadEncoding,
                  "byte " + std::to_string(b) + " outside [63, 126]");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 1 || n > kMaxGraph6Order) {
    throw Error(ErrorCode::kBadEncoding,
                "order " + std::to_string(n) + " not supported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) {
    throw Error(ErrorCode::kBadEncoding,
                "expected " + std::to_string(1 + bytes) + " bytes, got " +
                    std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw Error(ErrorCode::kBadEncoding, "nonzero padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body == kHeader) continue;
    out.push_back(parse_graph6(body));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace distidx
