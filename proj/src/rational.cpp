#include "delstar/rational.hpp"

namespace delstar {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("rational: bad integer '" + s + "'");
    return Rational(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("rational: bad fraction '" + s + "'");
  Int d(den);
  if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  return Rational(Int(num), d);
}

std::string format_rational(const Rational& r) { return r.str(); }

Int floor_q(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;  // truncation toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

Int ceil_q(const Rational& r) { return -floor_q(-r); }

Int floor_sqrt_q(const Rational& r) {
  if (r < 0) throw std::invalid_argument("floor_sqrt_q: negative argument");
  Int f = floor_q(r);
  Int s = sqrt(f);  // integer sqrt, rounds down
  while ((s + 1) * (s + 1) <= r) ++s;
  while (s * s > r) --s;
  return s;
}

QVec to_qvec(const PointVec& p) {
  QVec q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
  return q;
}

}  // namespace delstar
