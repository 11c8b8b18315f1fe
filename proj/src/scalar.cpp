#include "anick/scalar.hpp"

#include <cctype>

#include "anick/error.hpp"

namespace anick {

std::string to_string(const Scalar& q) { return q.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto digits = [](const std::string& t, std::size_t from) {
    if (from >= t.size()) return false;
    for (std::size_t i = from; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!digits(num, start)) throw InputError("not a rational number: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Scalar q;
  if (slash == std::string::npos) {
    q = mpz_class(num);
  } else {
    std::string den = s.substr(slash + 1);
    if (!digits(den, 0)) throw InputError("not a rational number: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    q = Scalar(mpz_class(num), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace anick
