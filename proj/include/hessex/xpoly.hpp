#pragma once

// Integer polynomials in x1..x6, used for multidegrees and Schubert polynomials.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "hessex/polycore.hpp"

namespace hessex {

class XPolynomial {
 public:
  using Exps = std::array<std::uint8_t, kMaxMatrixSize>;

  XPolynomial() = default;
  XPolynomial(long c);  // NOLINT
  static XPolynomial x(int j);  // 1-based
  static XPolynomial monomial(const Exps& e, const Integer& c = 1);
  static XPolynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for zero.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  XPolynomial homogeneous_part(int d) const;
  bool nonnegative() const;
  const std::map<Exps, Integer, std::greater<>>& terms() const { return terms_; }

  XPolynomial operator+(const XPolynomial& o) const;
  XPolynomial operator-(const XPolynomial& o) const;
  XPolynomial operator*(const XPolynomial& o) const;
  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial scale(const Integer& c) const;

  /// (f - s_i f) / (x_i - x_{i+1}), 1-based i.
  XPolynomial divided_difference(int i) const;

  /// Terms by descending lex exponent vector, e.g. "x1^2*x2+2*x3-1".
  std::string to_string() const;

  friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exps& e, const Integer& c);
  std::map<Exps, Integer, std::greater<>> terms_;
};

}  // namespace hessex
