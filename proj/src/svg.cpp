#include "nilcox/svg.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <vector>

#include "nilcox/xi.hpp"

namespace nilcox {

namespace {

struct Pt {
  double x, y;
};

// roots of A2 with |alpha|^2 = 1; theta = alpha1 + alpha2
const Pt kA1{1.0, 0.0};
const Pt kA2{-0.5, std::sqrt(3.0) / 2.0};
const Pt kTheta{0.5, std::sqrt(3.0) / 2.0};

double dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

Pt reflect(int letter, const Pt& p) {
  if (letter == 0) {
    double c = 2.0 * (dot(p, kTheta) - 1.0);
    return Pt{p.x - c * kTheta.x, p.y - c * kTheta.y};
  }
  const Pt& a = letter == 1 ? kA1 : kA2;
  double c = 2.0 * dot(p, a);
  return Pt{p.x - c * a.x, p.y - c * a.y};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

// numeric magnitude of the balanced quantum binomial at q = exp(-i pi / m),
// used only for display
double binom_magnitude(long p, long q, int m) {
  std::complex<double> qq = std::polar(1.0, -M_PI / m);
  std::vector<std::complex<double>> row(1, 1.0);
  for (long k = 1; k <= p; ++k) {
    std::vector<std::complex<double>> nxt(k + 1, 0.0);
    for (long c = 0; c <= k; ++c) {
      if (c <= k - 1) nxt[c] += std::pow(qq, (double)c) * row[c];
      if (c >= 1) nxt[c] += std::pow(qq, (double)(c - k)) * row[c - 1];
    }
    row = std::move(nxt);
  }
  return std::abs(row[q]);
}

}  // namespace

std::string alcove_svg(int m) {
  const int n = 3;
  const int dmax = 3 * m;

  struct Alcove {
    int len;
    long a, b;
    int i;
    Pt v[3];
    bool vanishing;
    std::string label;
  };
  std::vector<Alcove> alcoves;

  Pt base[3] = {Pt{0.0, 0.0}, Pt{0.0, 2.0 / std::sqrt(3.0)}, Pt{1.0, 1.0 / std::sqrt(3.0)}};

  auto alcove_of = [&](const Word& w, Alcove& A) {
    for (int t = 0; t < 3; ++t) {
      Pt p = base[t];
      for (size_t k = w.size(); k-- > 0;) p = reflect(w[k], p);
      A.v[t] = p;
    }
  };

  {
    Alcove id{0, -1, -1, -1, {}, false, ""};
    alcove_of(Word{}, id);
    alcoves.push_back(id);
  }
  for (int d = 1; d <= dmax; ++d)
    for (long a = 0; a <= d - 1; ++a)
      for (int i = 0; i < n; ++i) {
        Alcove A;
        A.len = d;
        A.a = a;
        A.b = d - 1 - a;
        A.i = i;
        alcove_of(abi_word(n, AbiTriple{A.a, A.b, i}), A);
        A.vanishing = (A.a >= 2 * m + 1) || (A.b >= 2 * m + 1);
        if (d == dmax && !A.vanishing) {
          auto idx = xi_binomial_indices(A.a, m);
          if (idx) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "[%ld,%ld]", idx->first, idx->second);
            A.label = buf;
          }
        }
        alcoves.push_back(A);
      }

  double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
  for (const auto& A : alcoves)
    for (const auto& p : A.v) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  const double scale = 60.0, pad = 20.0;
  auto X = [&](double x) { return (x - minx) * scale + pad; };
  auto Y = [&](double y) { return (maxy - y) * scale + pad; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt((maxx - minx) * scale + 2 * pad) << "\" height=\""
      << fmt((maxy - miny) * scale + 2 * pad) << "\">\n";
  for (const auto& A : alcoves) {
    std::string fill = "white";
    if (A.len > 0 && A.vanishing) fill = "#8caee6";
    else if (A.len == dmax) fill = "#fdf3d8";
    svg << "<polygon points=\"";
    for (int t = 0; t < 3; ++t) {
      if (t) svg << " ";
      svg << fmt(X(A.v[t].x)) << "," << fmt(Y(A.v[t].y));
    }
    svg << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"0.8\"";
    if (A.len >= 1)
      svg << "><title>w(" << A.a << "," << A.b << "," << (A.i == 0 ? 3 : A.i) << ")</title></polygon>\n";
    else
      svg << "><title>identity</title></polygon>\n";
    if (!A.label.empty()) {
      double cx = (A.v[0].x + A.v[1].x + A.v[2].x) / 3.0;
      double cy = (A.v[0].y + A.v[1].y + A.v[2].y) / 3.0;
      auto idx = xi_binomial_indices(A.a, m);
      svg << "<text x=\"" << fmt(X(cx)) << "\" y=\"" << fmt(Y(cy))
          << "\" font-size=\"7\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
          << A.label << "<title>magnitude " << fmt(binom_magnitude(idx->first, idx->second, m))
          << "</title></text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace nilcox
