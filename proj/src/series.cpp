#include "anick/series.hpp"

#include "anick/error.hpp"

namespace anick {

SeriesTrunc::SeriesTrunc(int order, const std::vector<Scalar>& coeffs) : c_(static_cast<std::size_t>(order) + 1, 0) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

SeriesTrunc SeriesTrunc::one(int order) {
  SeriesTrunc s(order);
  s[0] = 1;
  return s;
}

std::string SeriesTrunc::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + anick::to_string(c_[i]);
  return s + "]";
}

static void same_order(const SeriesTrunc& a, const SeriesTrunc& b) {
  if (a.order() != b.order()) throw InputError("series truncated at different orders");
}

SeriesTrunc series_add(const SeriesTrunc& a, const SeriesTrunc& b) {
  same_order(a, b);
  SeriesTrunc r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

SeriesTrunc series_sub(const SeriesTrunc& a, const SeriesTrunc& b) {
  same_order(a, b);
  SeriesTrunc r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

SeriesTrunc series_mul(const SeriesTrunc& a, const SeriesTrunc& b) {
  same_order(a, b);
  int n = a.order();
  SeriesTrunc r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

SeriesTrunc series_inverse(const SeriesTrunc& a) {
  if (a.order() < 0) return a;
  if (a[0] == 0) throw InputError("cannot invert a series with zero constant term");
  int n = a.order();
  // x <- x (2 - a x), doubling the correct prefix each round
  SeriesTrunc x(n);
  x[0] = 1 / a[0];
  for (int prec = 1; prec <= n; prec *= 2) {
    int m = std::min(n, 2 * prec);
    SeriesTrunc ax(m), xs(m), as(m);
    for (int i = 0; i <= m; ++i) {
      xs[i] = x[i];
      as[i] = a[i];
    }
    ax = series_mul(as, xs);
    SeriesTrunc two_minus(m);
    for (int i = 0; i <= m; ++i) two_minus[i] = -ax[i];
    two_minus[0] += 2;
    SeriesTrunc nx = series_mul(xs, two_minus);
    for (int i = 0; i <= m; ++i) x[i] = nx[i];
  }
  return x;
}

std::string render_t_polynomial(const std::vector<Scalar>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    bool neg = p[i] < 0;
    Scalar a = neg ? Scalar(-p[i]) : p[i];
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      s += anick::to_string(a);
    } else if (a == 1) {
      s += mono;
    } else {
      s += anick::to_string(a) + "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

std::string RationalForm::to_string() const {
  auto wrap = [](const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(render_t_polynomial(numerator)) + " / " + wrap(render_t_polynomial(denominator));
}

std::optional<RationalForm> candidate_closed_form(const SeriesTrunc& s) {
  const auto& a = s.coeffs();
  std::size_t N = a.size();
  // Berlekamp-Massey: connection polynomial C with sum_k C[k] a[i-k] = 0
  std::vector<Scalar> C{1}, B{1};
  std::size_t L = 0, m = 1;
  Scalar b = 1;
  for (std::size_t i = 0; i < N; ++i) {
    Scalar d = a[i];
    for (std::size_t k = 1; k <= L && k < C.size(); ++k) d += C[k] * a[i - k];
    if (d == 0) {
      ++m;
      continue;
    }
    std::vector<Scalar> T = C;
    Scalar coef = d / b;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t k = 0; k < B.size(); ++k) C[k + m] -= coef * B[k];
    if (2 * L <= i) {
      L = i + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  while (C.size() > 1 && C.back() == 0) C.pop_back();
  if (2 * L + 2 > N) return std::nullopt;
  // numerator = a * C, truncated below degree L (anything above vanishes by the recurrence)
  std::vector<Scalar> P(L, 0);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t k = 0; k <= i && k < C.size(); ++k) P[i] += C[k] * a[i - k];
  while (!P.empty() && P.back() == 0) P.pop_back();
  if (P.empty()) P.push_back(0);
  return RationalForm{P, C};
}

}  // namespace anick
