#include "cbasis/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace cbasis {

namespace {

long long floordiv(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Block offsets for degree g, writing t = -g: odd t gives a triangle copy
// shifted by ((t-1)/2) * ell in both directions, even t a transposed copy one
// block lower.  Cell (i,j) lands at (j-1, i-1) in a plain copy and at
// (i-1, j-1) in a transposed one, relative to the block corner.
struct BlockFrame {
  long long row_off, col_off;
  bool transposed;
};

BlockFrame frame_for_degree(int degree, int ell) {
  const long long t = -static_cast<long long>(degree);
  if (((t % 2) + 2) % 2 == 1) {
    const long long b = floordiv(t - 1, 2);
    return {b * ell, b * ell, false};
  }
  const long long b = floordiv(t, 2);
  return {b * ell, (b - 1) * ell, true};
}

}  // namespace

std::string render_strip(const Monomial& p) {
  const int ell = p.rank();
  std::ostringstream head;
  head << "strip ell=" << ell << " monomial=" << to_string(p) << '\n';
  if (p.empty()) return head.str();

  const int dmin = p.factors().front().degree;
  const int dmax = p.factors().back().degree;

  std::map<std::pair<long long, long long>, char> canvas;
  long long rmin = 0, rmax = 0, cmin = 0, cmax = 0;
  bool first = true;
  auto put = [&](long long r, long long c, char ch) {
    if (first) {
      rmin = rmax = r;
      cmin = cmax = c;
      first = false;
    }
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    auto it = canvas.find({r, c});
    if (it == canvas.end() || it->second == '.')
      canvas[{r, c}] = ch;
    else if (ch != '.')
      it->second = (it->second == 'o') ? '2' : static_cast<char>(std::min(it->second + 1, int{'9'}));
  };

  // background cells of every triangle in the degree range
  for (int g = dmax; g >= dmin; --g) {
    const BlockFrame f = frame_for_degree(g, ell);
    for (int i = 1; i <= ell; ++i)
      for (int j = i; j <= ell; ++j) {
        if (f.transposed)
          put(f.row_off + i - 1, f.col_off + j - 1, '.');
        else
          put(f.row_off + j - 1, f.col_off + i - 1, '.');
      }
  }
  for (const Variable& v : p.factors()) {
    const BlockFrame f = frame_for_degree(v.degree, ell);
    if (f.transposed)
      put(f.row_off + v.color.col - 1, f.col_off + v.color.row - 1, 'o');
    else
      put(f.row_off + v.color.row - 1, f.col_off + v.color.col - 1, 'o');
  }

  std::ostringstream os;
  os << head.str();
  for (long long r = rmin; r <= rmax; ++r) {
    std::string line;
    for (long long c = cmin; c <= cmax; ++c) {
      auto it = canvas.find({r, c});
      line.push_back(it == canvas.end() ? ' ' : it->second);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace cbasis
