#include "nadyn/localfield/valuation.hpp"

#include <cctype>

#include "nadyn/errors.hpp"

namespace nadyn::localfield {

const mpq_class& Valuation::exact() const {
  if (kind_ == Kind::at_least) {
    throw PrecisionError("valuation only known to be at least " + rational_string(value_));
  }
  if (kind_ == Kind::infinite) throw DomainError("valuation of zero is infinite");
  return value_;
}

std::string Valuation::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return rational_string(value_);
    case Kind::infinite:
      return "inf";
    case Kind::at_least:
      return ">=" + rational_string(value_);
  }
  return {};
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinite();
  mpq_class sum = a.bound() + b.bound();
  if (a.is_finite() && b.is_finite()) return Valuation::of(sum);
  return Valuation::at_least(sum);
}

Valuation operator+(const Valuation& a, const mpq_class& shift) {
  if (a.is_infinite()) return a;
  if (a.is_finite()) return Valuation::of(a.bound() + shift);
  return Valuation::at_least(a.bound() + shift);
}

Valuation min(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.bound() < b.bound()) return a.is_finite() ? a : Valuation::at_least(a.bound());
  if (b.bound() < a.bound()) return b.is_finite() ? b : Valuation::at_least(b.bound());
  // Equal values: the sum may cancel, so only a lower bound survives unless
  // the caller knows better.
  return Valuation::at_least(a.bound());
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw UsageError("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t k = start; k < t.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw UsageError("not a rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw UsageError("zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

long padic_order(const mpz_class& n, long p) {
  if (n == 0) throw DomainError("order of zero");
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long padic_order(const mpq_class& q, long p) {
  return padic_order(mpz_class(q.get_num()), p) - padic_order(mpz_class(q.get_den()), p);
}

}  // namespace nadyn::localfield
