#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anick/scalar.hpp"

namespace anick {

// Power series truncated after t^order.
class SeriesTrunc {
 public:
  SeriesTrunc() = default;
  explicit SeriesTrunc(int order) : c_(static_cast<std::size_t>(order) + 1, 0) {}
  SeriesTrunc(int order, const std::vector<Scalar>& coeffs);
  static SeriesTrunc one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool operator==(const SeriesTrunc&) const = default;

  std::string to_string() const;  // "[1, 2, 3]"

 private:
  std::vector<Scalar> c_;
};

SeriesTrunc series_add(const SeriesTrunc& a, const SeriesTrunc& b);
SeriesTrunc series_sub(const SeriesTrunc& a, const SeriesTrunc& b);
SeriesTrunc series_mul(const SeriesTrunc& a, const SeriesTrunc& b);
// Newton iteration; throws InputError when the constant term vanishes
SeriesTrunc series_inverse(const SeriesTrunc& a);

// p(t)/q(t) matching every known coefficient, found by Berlekamp-Massey.
// Only offered when the recurrence is confirmed by at least two extra terms.
struct RationalForm {
  std::vector<Scalar> numerator;
  std::vector<Scalar> denominator;
  std::string to_string() const;
};
std::optional<RationalForm> candidate_closed_form(const SeriesTrunc& s);

std::string render_t_polynomial(const std::vector<Scalar>& p);

}  // namespace anick
