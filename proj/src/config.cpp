#include "ftca/config.hpp"

#include <numeric>
#include <random>
#include <string>

namespace ftca {

int64_t Configuration::active_count() const {
  return std::accumulate(state.begin(), state.end(), int64_t{0});
}

namespace {

// Splits text into lines, insisting on LF endings and no trailing whitespace.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      pos = text.size();
    } else {
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  return lines;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw BadHeader("empty input");
  std::string_view h = lines[0];
  size_t sp = h.find(' ');
  if (sp == std::string_view::npos) throw BadHeader(std::string(h));
  std::string_view kind = h.substr(0, sp);
  std::string_view num = h.substr(sp + 1);
  if (kind != "SQ" && kind != "TRI") throw BadHeader(std::string(h));
  if (num.empty()) throw BadHeader(std::string(h));
  long n = 0;
  for (char c : num) {
    if (c < '0' || c > '9') throw BadHeader(std::string(h));
    n = n * 10 + (c - '0');
    if (n > 1'000'000) throw BadDimensions("side too large");
  }
  bool tri = kind == "TRI";
  if (n < (tri ? 1 : 2)) throw BadDimensions("side too small");
  if (text.empty() || text.back() != '\n') throw BadDimensions("missing final newline");
  long want_rows = n, want_cols = tri ? 2 * n : n;
  if (long(lines.size()) - 1 != want_rows)
    throw BadDimensions("expected " + std::to_string(want_rows) + " rows, got " +
                        std::to_string(lines.size() - 1));
  bool doubled = tri && (n % 2 != 0);
  Grid g = tri ? Grid::triangular(int(doubled ? 2 * n : n)) : Grid::square(int(n));
  Configuration cfg = Configuration::empty(g);
  cfg.odd_rows_doubled = doubled;
  for (long r = 0; r < want_rows; ++r) {
    std::string_view row = lines[r + 1];
    // Symbols are checked before length so CR and stray whitespace report as
    // bad symbols, not as a row-length mismatch.
    for (char ch : row)
      if (ch != '0' && ch != '1')
        throw BadSymbol(std::string(1, ch) + " at row " + std::to_string(r));
    if (long(row.size()) != want_cols)
      throw BadDimensions("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                          " symbols, expected " + std::to_string(want_cols));
    for (long c = 0; c < want_cols; ++c) {
      uint8_t v = uint8_t(row[c] - '0');
      cfg.state[g.idx({int(r), int(c)})] = v;
      if (doubled) cfg.state[g.idx({int(r + n), int(c)})] = v;
    }
  }
  return cfg;
}

std::string serialize(const Configuration& c) {
  const Grid& g = c.grid;
  bool tri = g.topology == Topology::Triangular;
  std::string out = (tri ? "TRI " : "SQ ") + std::to_string(g.rows) + "\n";
  out.reserve(out.size() + size_t(g.size()) + size_t(g.rows));
  for (int r = 0; r < g.rows; ++r) {
    for (int col = 0; col < g.cols; ++col)
      out.push_back(char('0' + c.state[g.idx({r, col})]));
    out.push_back('\n');
  }
  return out;
}

Configuration random_configuration(Topology t, int n, double density, uint64_t seed) {
  Grid g = t == Topology::Square ? Grid::square(n) : Grid::triangular(n);
  Configuration cfg = Configuration::empty(g);
  std::mt19937_64 rng(seed);
  for (auto& s : cfg.state) {
    double u = double(rng() >> 11) * 0x1p-53;
    s = u < density ? 1 : 0;
  }
  return cfg;
}

Configuration build_padded(const Configuration& x) {
  if (x.grid.topology != Topology::Square)
    throw GridMismatch("build_padded is defined on square grids");
  int64_t n = x.grid.rows;
  int64_t m = 2 * n * n + 3 * n;
  if (m > 20000) throw BadDimensions("padded torus side too large: " + std::to_string(m));
  Configuration d = Configuration::empty(Grid::square(int(m)));
  for (int64_t br = 0; br < 2 * n + 1; ++br)
    for (int64_t bc = 0; bc < 2 * n + 1; ++bc) {
      int64_t r0 = n + br * n, c0 = n + bc * n;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          d.state[(r0 + r) * m + (c0 + c)] = x.state[r * n + c];
    }
  return d;
}

Cell padded_center_image(int n, Cell u) {
  int off = n * n + n;
  return {off + u.row, off + u.col};
}

}  // namespace ftca
