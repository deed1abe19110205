#include "arcsys/constructions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace arcsys {

int root_gap(int m) { return m + 1; }

ArcClass alpha_below(int n) { return reduce(SurfaceSpec(n), Side::Upper, {}); }

ArcClass alpha_abc(int n, int a, int b, int c) {
  const bool triple = 0 <= a && a < b && b < c && c <= n - 2;
  const bool double_root = 0 < a && a < n - 2 && b == n - 2 && c == n - 2;
  if (!triple && !double_root) throw std::invalid_argument("root triple outside the construction");
  std::map<int, int> mult;
  for (int r : {a, b, c}) ++mult[r];
  // Sign of (x+1)(x-a)(x-b)(x-c) just right of -1: one negative factor per root.
  Side side = Side::Upper;
  std::vector<int> seq;
  for (auto [root, k] : mult) {
    if (k % 2 == 1) side = flip(side);
    if (k % 2 == 1) seq.push_back(root_gap(root));
  }
  return reduce(SurfaceSpec(n), side, seq);
}

ArcClass alpha_ij(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n - 2)) throw std::invalid_argument("index pair outside the construction");
  return reduce(SurfaceSpec(n), Side::Upper, {i + 1, 0, j});
}

ArcClass gamma_arc(int n, int k) {
  if (!(1 <= k && k <= n - 3)) throw std::invalid_argument("gamma index out of range");
  return reduce_between(SurfaceSpec(n), Puncture::r(k), Puncture::r(k + 1), Side::Upper, {});
}

namespace {

// Gap of the point (x, 0) with p = -1, r_i = i - 1/2 and q at infinity.
int gap_at(int n, const Rational& x) {
  if (x < -1) return 0;
  for (int k = 0; k <= n - 3; ++k)
    if (x < Rational(2 * k + 1, 2)) return k + 1;
  return n - 1;
}

EmbeddedArc drawing(int n, Side side, const std::vector<Rational>& xs) {
  EmbeddedArc e;
  e.cls.n = n;
  e.cls.side = side;
  for (const auto& x : xs) {
    int g = gap_at(n, x);
    e.cls.seq.push_back(g);
    // Monotone in x and well inside the gap for |x| < n.
    e.params.push_back(Rational(g) + Rational(1, 2) + x / Rational(16 * n));
  }
  return e;
}

}  // namespace

EmbeddedArc alpha_abc_drawing(int n, int a, int b, int c) {
  alpha_abc(n, a, b, c);
  std::vector<Rational> xs{Rational(a)};
  if (b != c) xs = {Rational(a), Rational(b), Rational(c)};
  return drawing(n, xs.size() % 2 == 1 ? Side::Lower : Side::Upper, xs);
}

EmbeddedArc alpha_ij_drawing(int n, int i, int j) {
  alpha_ij(n, i, j);
  return drawing(n, Side::Upper, {Rational(4 * i - 1, 4), Rational(-2), Rational(4 * j - 3, 4)});
}

ArcSystem max_two_system(int n) {
  if (n < 3) throw std::domain_error("the construction needs n >= 3");
  std::vector<ArcClass> cls{alpha_below(n)};
  std::vector<std::string> labels{"alpha_<-1"};
  for (int a = 0; a <= n - 2; ++a)
    for (int b = a + 1; b <= n - 2; ++b)
      for (int c = b + 1; c <= n - 2; ++c) {
        cls.push_back(alpha_abc(n, a, b, c));
        labels.push_back("alpha_" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
      }
  for (int a = 1; a < n - 2; ++a) {
    cls.push_back(alpha_abc(n, a, n - 2, n - 2));
    labels.push_back("alpha_" + std::to_string(a) + "," + std::to_string(n - 2) + "," + std::to_string(n - 2));
  }
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) {
      cls.push_back(alpha_ij(n, i, j));
      labels.push_back("alpha_" + std::to_string(i) + "," + std::to_string(j));
    }
  return make_system(SurfaceSpec(n), std::move(cls), std::move(labels));
}

ArcSystem zero_system(int n) {
  if (n < 3) throw std::domain_error("the construction needs n >= 3");
  std::vector<ArcClass> cls{alpha_below(n)};
  std::vector<std::string> labels{"c_0"};
  // c_k leaves p into the lower half, rises through the gap between r_k and
  // r_{k+1} and reaches q from above, cutting r_1..r_k off from the rest.
  for (int k = 1; k <= n - 3; ++k) {
    cls.push_back(reduce(SurfaceSpec(n), Side::Lower, {k + 1}));
    labels.push_back("c_" + std::to_string(k));
  }
  return make_system(SurfaceSpec(n), std::move(cls), std::move(labels));
}

}  // namespace arcsys
