#include "lrcomm/render.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

namespace lrcomm {

namespace {

// Doubled coordinates: vertex a_{ij} sits at X = 2(i+j), Y = 2(j-i).
struct Grid {
  std::map<std::pair<int, int>, std::string> at;
  void put(int x, int y, std::string s) { at[{x, y}] = std::move(s); }
};

}  // namespace

std::string render_ascii(const Hive& h) {
  int n = h.n;
  std::ostringstream out;
  out << "n=" << n << " lambda=" << seq_str(h.lambda) << " mu=" << seq_str(h.mu) << " nu=" << seq_str(h.nu) << "\n";
  if (n == 0) return out.str();

  Grid g;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) g.put(2 * (i + j), 2 * (j - i), ".");
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) g.put(2 * (i + j - 1), 2 * (j - i), std::to_string(h.U(i, j)));
  for (int j = 1; j <= n; ++j) g.put(2 * j - 1, 2 * j - 1, std::to_string(h.m(j)));
  for (int i = 1; i <= n; ++i) g.put(2 * (i + n) - 1, 2 * (n - i) + 1, std::to_string(h.v(i)));
  for (int i = 1; i <= n; ++i) g.put(4 * i - 2, 0, std::to_string(h.lam(i)));

  std::size_t w = 1;
  for (const auto& [k, s] : g.at) w = std::max(w, s.size());
  ++w;
  for (int y = 2 * n; y >= 0; --y) {
    std::string line;
    for (int x = 0; x <= 4 * n; ++x) {
      auto it = g.at.find({x, y});
      std::string cell = it == g.at.end() ? "" : it->second;
      line += std::string(w - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string render_svg(const Hive& h) {
  int n = h.n;
  const double s = 60.0, pad = 40.0, ry = 0.8660254037844386;
  auto px = [&](int i, int j) { return pad + s * (i + j) / 2.0; };
  auto py = [&](int i, int j) { return pad + s * ry * (n - (j - i)); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return std::string(buf);
  };
  std::ostringstream out;
  double width = 2 * pad + s * n, height = 2 * pad + s * ry * n;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" font-family=\"monospace\" font-size=\"12\">\n";
  auto line = [&](int i1, int j1, int i2, int j2) {
    out << "<line x1=\"" << num(px(i1, j1)) << "\" y1=\"" << num(py(i1, j1)) << "\" x2=\"" << num(px(i2, j2))
        << "\" y2=\"" << num(py(i2, j2)) << "\" stroke=\"black\"/>\n";
  };
  auto label = [&](double x, double y, int v, const char* colour) {
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" fill=\"" << colour
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v << "</text>\n";
  };
  auto e = edge_labels(h);
  // alpha_{ij}: a_{i,j-1} -- a_{ij}; beta_{ij}: a_{i-1,j} -- a_{ij}; gamma_{ij}: a_{i-1,j-1} -- a_{ij}
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      line(i, j - 1, i, j);
      label((px(i, j - 1) + px(i, j)) / 2, (py(i, j - 1) + py(i, j)) / 2, e.alpha(i, j), "blue");
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      line(i - 1, j, i, j);
      label((px(i - 1, j) + px(i, j)) / 2, (py(i - 1, j) + py(i, j)) / 2, e.beta(i, j), "red");
      line(i - 1, j - 1, i, j);
      label((px(i - 1, j - 1) + px(i, j)) / 2, (py(i - 1, j - 1) + py(i, j)) / 2 + 9, e.gamma(i, j), "green");
    }
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      label((px(i - 1, j - 1) + px(i, j)) / 2, (py(i - 1, j) + py(i, j - 1)) / 2, h.U(i, j), "gray");
  out << "</svg>\n";
  return out.str();
}

}  // namespace lrcomm
