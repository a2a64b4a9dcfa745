#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "retoric/integer.hpp"

namespace retoric {

// Polynomial with integer coefficients in the four fixed counting variables
// x, y, z, t (exponent order as listed).  Used for the orbit-count
// polynomials and the virtual Betti polynomial.
class CountPolynomial {
 public:
  using Exp = std::array<int, 4>;

  CountPolynomial() = default;
  static CountPolynomial constant(Int c);
  static CountPolynomial monomial(int ex, int ey, int ez, int et, Int c = Int(1));
  static CountPolynomial var_x() { return monomial(1, 0, 0, 0); }
  static CountPolynomial var_y() { return monomial(0, 1, 0, 0); }
  static CountPolynomial var_z() { return monomial(0, 0, 1, 0); }
  static CountPolynomial var_t() { return monomial(0, 0, 0, 1); }

  CountPolynomial operator+(const CountPolynomial& o) const;
  CountPolynomial operator-(const CountPolynomial& o) const;
  CountPolynomial operator*(const CountPolynomial& o) const;
  CountPolynomial& operator+=(const CountPolynomial& o);
  bool operator==(const CountPolynomial& o) const = default;

  Int coeff(int ex, int ey, int ez, int et) const;
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Exp, Int>& terms() const { return terms_; }

  // Replaces each variable that has a replacement by the given polynomial.
  CountPolynomial substitute(const std::array<std::optional<CountPolynomial>, 4>& repl) const;

  Int evaluate(const std::array<Int, 4>& vals) const;

  // Terms ordered by descending total degree ("t^2+2t+1" style).
  std::string to_string() const;
  // Terms ordered by ascending total degree ("1+2t+t^2" style).
  std::string to_string_ascending() const;

 private:
  void add_term(const Exp& e, const Int& c);
  std::map<Exp, Int> terms_;
};

}  // namespace retoric
