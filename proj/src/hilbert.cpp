#include "anick/hilbert.hpp"

#include "anick/error.hpp"

namespace anick {

SeriesTrunc hilbert_from_normal_words(const NcGB& G, int d) {
  auto counts = normal_word_counts(G, d);
  SeriesTrunc s(d);
  for (int k = 0; k <= d; ++k) s[k] = mpz_class(std::to_string(counts[static_cast<std::size_t>(k)]));
  return s;
}

SeriesTrunc hilbert_from_normal_words(const CommGB& G, const RingPtr& ring, int d) {
  SeriesTrunc s(d);
  for (int k = 0; k <= d; ++k) s[k] = static_cast<long>(standard_monomials(ring, G.basis, k).size());
  return s;
}

SeriesTrunc hilbert_from_chains(const ChainSet& cs, int d) {
  if (d > cs.max_degree())
    throw BoundError("chains enumerated only up to degree " + std::to_string(cs.max_degree()));
  bool deepest_contributes = false;
  for (const auto& c : cs.level(cs.max_level()))
    if (c.degree <= d) deepest_contributes = true;
  if (deepest_contributes && cs.max_level() >= 0)
    throw BoundError("chains at level " + std::to_string(cs.max_level()) +
                     " still reach degree <= " + std::to_string(d) + "; enumerate more levels");
  SeriesTrunc alt(d);
  for (int n = -1; n <= cs.max_level(); ++n) {
    int sign = (n % 2 == 0) ? -1 : 1;  // C_-1 positive, C_0 negative, ...
    for (const auto& c : cs.level(n))
      if (c.degree <= d) alt[static_cast<std::size_t>(c.degree)] += sign;
  }
  return series_inverse(alt);
}

SeriesTrunc free_product_series(const SeriesTrunc& hA, const SeriesTrunc& hB) {
  if (hA.order() < 0 || hA[0] != 1 || hB[0] != 1) throw InputError("free product series need constant term 1");
  SeriesTrunc s = series_add(series_inverse(hA), series_inverse(hB));
  s[0] -= 1;
  return series_inverse(s);
}

SeriesTrunc generator_product_series(const std::vector<int>& degrees, int d, bool exterior) {
  SeriesTrunc acc = SeriesTrunc::one(d);
  for (int w : degrees) {
    if (w < 1) throw InputError("generator degrees must be positive");
    SeriesTrunc f(d);
    if (exterior) {
      f[0] = 1;
      if (w <= d) f[static_cast<std::size_t>(w)] = 1;
    } else {
      for (int k = 0; k <= d; k += w) f[static_cast<std::size_t>(k)] = 1;
    }
    acc = series_mul(acc, f);
  }
  return acc;
}

}  // namespace anick
