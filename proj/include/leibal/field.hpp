#pragma once

#include <gmpxx.h>

#include <string>

#include "leibal/errors.hpp"

namespace leibal {

/// Exact coefficient field: the rationals (modulus 0) or F_p for an odd
/// prime p.  Elements are mpq_class values; over F_p the canonical
/// representative is an integer in [0, p) with denominator 1.  Arithmetic is
/// exact in both cases — no floating point anywhere in the library.
class Field {
public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }

  /// F_p.  Rejects p = 2 (the theory needs 1/2) and non-primes.
  static Field prime(const mpz_class& p);

  bool is_rational() const { return p_ == 0; }
  const mpz_class& modulus() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  /// Canonical representative (no-op over Q, residue lift over F_p).
  /// Over F_p a denominator divisible by p is a domain error.
  mpq_class reduce(const mpq_class& a) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const;

  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

  /// "p" or "p/q", exact.
  static std::string str(const mpq_class& a) { return a.get_str(); }

  /// Exact rational literal "p", "-p", "p/q".  Rejects zero denominators.
  static mpq_class parse(const std::string& text);

  std::string name() const;

private:
  mpz_class p_; // 0 = rationals, else an odd prime
};

} // namespace leibal
