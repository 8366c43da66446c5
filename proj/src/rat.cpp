#include "hyperxf/rat.hpp"

#include <cctype>

#include "hyperxf/error.hpp"

namespace hyperxf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw fail();
  if (negative) n = -n;
  return Rat(n, d);
}

std::string Rat::decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpz_class n = v_.get_num();
  if (n < 0) n = -n;
  const mpz_class d = v_.get_den();
  // Find exponent e with 10^e <= n/d < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  auto ge_pow = [&](long k) {  // n/d >= 10^k
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? n >= d * p : n * p >= d;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;
  // mantissa = round(n/d * 10^(digits-1-e))
  const long shift = digits - 1 - e;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpz_class scaled_n = shift >= 0 ? n * p : n;
  mpz_class scaled_d = shift >= 0 ? d : d * p;
  mpz_class m = (2 * scaled_n + scaled_d) / (2 * scaled_d);
  std::string ms = m.get_str();
  if (static_cast<long>(ms.size()) > digits) {  // rounding carried into a new digit
    ++e;
    ms.pop_back();
  }
  std::string out = sign() < 0 ? "-" : "";
  out += ms.substr(0, 1);
  if (ms.size() > 1) {
    std::string frac = ms.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Rat(1) / pow(r, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

}  // namespace hyperxf
