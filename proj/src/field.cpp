#include "leibal/field.hpp"

#include <cctype>

namespace leibal {

Field Field::prime(const mpz_class& p) {
  if (p == 2)
    throw error("field characteristic 2 is not supported (1/2 must exist)");
  if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw error("modulus " + p.get_str() + " is not an odd prime");
  Field f;
  f.p_ = p;
  return f;
}

mpq_class Field::reduce(const mpq_class& a) const {
  if (p_ == 0) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpz_class den = a.get_den() % p_;
  if (den == 0)
    throw error("denominator divisible by the field characteristic");
  mpz_class inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
  mpz_class num = ((a.get_num() % p_) * inv_den) % p_;
  if (num < 0)
    num += p_;
  return mpq_class(num);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  return p_ == 0 ? mpq_class(a + b) : reduce(a + b);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  return p_ == 0 ? mpq_class(a - b) : reduce(a - b);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  return p_ == 0 ? mpq_class(a * b) : reduce(a * b);
}

mpq_class Field::neg(const mpq_class& a) const {
  return p_ == 0 ? mpq_class(-a) : reduce(-a);
}

mpq_class Field::inv(const mpq_class& a) const {
  if (is_zero(a))
    throw error("division by zero");
  if (p_ == 0)
    return mpq_class(1) / a;
  mpz_class inv_num;
  mpz_class num = a.get_num() % p_;
  mpz_invert(inv_num.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
  return reduce(mpq_class(inv_num));
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
  return mul(a, inv(b));
}

mpq_class Field::parse(const std::string& text) {
  if (text.empty())
    throw parse_error("empty rational literal");
  // validate strictly: optional sign, digits, optional /digits
  size_t i = 0;
  if (text[i] == '-' || text[i] == '+')
    ++i;
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0)
    throw parse_error("malformed rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/')
      throw parse_error("malformed rational literal '" + text + "'");
    ++i;
    size_t den_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size())
      throw parse_error("malformed rational literal '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw parse_error("malformed rational literal '" + text + "'");
  if (q.get_den() == 0)
    throw parse_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + p_.get_str();
}

} // namespace leibal
