#include "hypercat/rational.hpp"

namespace hypercat {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int num = r.get_num() * scale * 2;
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  // round half away from zero
  if (q >= 0)
    q = (q + 1) / 2;
  else
    q = (q - 1) / 2;
  bool neg = q < 0;
  Int mag = abs(q);
  Int ip = mag / scale, fp = mag % scale;
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hypercat
