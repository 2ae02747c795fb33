#include "subcubic/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subcubic {
namespace poly {

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

IntPoly primitive_part(const RatPoly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p) {
    mpq_class scaled = c * lcm_den;
    out.push_back(scaled.get_num());
  }
  trim(out);
  return primitive_part(out);
}

IntPoly primitive_part(const IntPoly& p) {
  IntPoly out = p;
  trim(out);
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::pair<RatPoly, RatPoly> divide(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {RatPoly{}, r};
  RatPoly q(static_cast<std::size_t>(degree(r) - db + 1), mpq_class(0));
  const mpq_class lead = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    mpq_class factor = r.back() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divide(a, b);
  if (!r.empty()) throw std::logic_error("polynomial division is not exact");
  return q;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

mpq_class evaluate(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  // q^d p(num/q) = sum c_i num^i q^(d-i), and q > 0.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_power = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p) {
  std::vector<SquareFreeFactor> out;
  RatPoly f = to_rational(p);
  trim(f);
  if (degree(f) < 1) return out;
  RatPoly df = derivative(f);
  RatPoly a = gcd(f, df);
  RatPoly b = exact_quotient(f, a);
  RatPoly c = exact_quotient(df, a);
  RatPoly d = subtract(c, derivative(b));
  for (int i = 1; degree(b) >= 1; ++i) {
    RatPoly ai = gcd(b, d);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = subtract(c, derivative(b));
    if (degree(ai) >= 1) out.push_back({primitive_part(ai), i});
  }
  for (auto& sf : out) {
    if (sf.factor.back() < 0) {
      for (auto& coeff : sf.factor) coeff = -coeff;
    }
  }
  return out;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  IntPoly base = primitive_part(p);
  chain_.push_back(base);
  IntPoly d = primitive_part(derivative(base));
  if (d.empty()) return;
  chain_.push_back(d);
  for (;;) {
    RatPoly r = divide(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back())).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(primitive_part(r));
  }
}

int SturmSequence::sign_changes(const mpq_class& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
  return sign_changes(a) - sign_changes(b);
}

mpz_class root_bound(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.size() < 2) return 1;
  mpz_class lead = abs(q.back());
  mpz_class biggest = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) biggest = std::max(biggest, mpz_class(abs(q[i])));
  // Cauchy: |root| < 1 + max|c_i| / |c_n|.
  mpz_class limit = 1 + (biggest + lead - 1) / lead;
  mpz_class bound = 1;
  while (bound <= limit) bound *= 2;
  return bound;
}

std::string to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const mpz_class& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace poly

std::string to_decimal_string(const mpq_class& value) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_num().get_str() + "/" + value.get_den().get_str();
  const int digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = value.get_num() * (scale / value.get_den());
  const bool negative = scaled < 0;
  std::string body = mpz_class(abs(scaled)).get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(body.size())), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> mpq_class { throw std::invalid_argument("malformed rational '" + s + "'"); };
  if (s.empty()) return fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string digits;
  int frac = 0;
  bool dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.' && !dot) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (dot) ++frac;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace subcubic
