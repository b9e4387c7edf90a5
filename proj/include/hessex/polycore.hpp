#pragma once

// Exact multivariate polynomials over Q in the variables z[i,j], t, s, w.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hessex {

using Rational = mpq_class;
using Integer = mpz_class;

/// Largest matrix size whose coordinates fit in a monomial.
inline constexpr int kMaxMatrixSize = 6;
/// Exponent slots: w, s, t, then z[i,j] row-major on a kMaxMatrixSize grid.
inline constexpr int kNumSlots = 3 + kMaxMatrixSize * kMaxMatrixSize;
inline constexpr int kSlotAux = 0;
inline constexpr int kSlotS = 1;
inline constexpr int kSlotT = 2;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Variable {
  enum class Kind : std::uint8_t { Aux, S, T, Z };

  Kind kind = Kind::Z;
  int row = 0;
  int col = 0;

  static Variable z(int i, int j);
  static Variable t() { return {Kind::T, 0, 0}; }
  static Variable s() { return {Kind::S, 0, 0}; }
  static Variable aux() { return {Kind::Aux, 0, 0}; }
  static Variable from_slot(int slot);

  int slot() const;
  std::string name() const;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) {
    return a.slot() <=> b.slot();
  }
};

/// The variable universe of a polynomial ring: z[i,j] for i,j <= n plus the
/// optional singletons t, s and w.
struct Ring {
  int n = 0;
  bool has_t = false;
  bool has_s = false;
  bool has_aux = false;

  static Ring z_only(int n);
  static Ring with_t(int n);

  int num_variables() const;
  std::vector<Variable> variables() const;
  bool contains(const Variable& v) const;
  void validate() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, 40>;
  static_assert(kNumSlots <= 40);

  Monomial() { e_.fill(0); }
  static Monomial of(const Variable& v, int exponent = 1);

  int exponent(int slot) const { return e_[slot]; }
  int exponent(const Variable& v) const { return e_[v.slot()]; }
  void set_exponent(int slot, int value);
  const Exponents& exponents() const { return e_; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Bit k set iff slot k has positive exponent.
  std::uint64_t support() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e_.data(), b.e_.data(), a.e_.size()) == 0;
  }
  /// Lexicographic comparison of the raw slot layout.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int c = std::memcmp(a.e_.data(), b.e_.data(), a.e_.size());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  Exponents e_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// A lexicographic term order given by a priority sequence over all slots.
///
/// Every order in this library is lexicographic; orders differ only in the
/// ranking of variables. Slots that the defining sequence does not mention
/// are appended in slot order, so every order is total on all monomials.
class MonomialOrder {
 public:
  enum class Kind { Lex, Elimination, DiagonalTwist };

  /// Lex with the given variables first, in the given order.
  static MonomialOrder lex(const std::vector<Variable>& sequence);
  /// Lex in slot order: w > s > t > z[1,1] > z[1,2] > ... (row-major).
  static MonomialOrder lex_default();
  /// s > t > z[1,n] > ... > z[1,1] > z[2,1] > ... > z[2,n] > ... > z[n,n],
  /// with w placed first.
  static MonomialOrder elimination(int n);
  /// Row-major lex on the z variables with rows visited in the order
  /// row_order[0], row_order[1], ... (1-based rows). The identity gives a
  /// diagonal term order on minors; the reversal gives an antidiagonal one.
  static MonomialOrder diagonal_twist(int n, const std::vector<int>& row_order);
  /// `first` ahead of every other variable, the rest ranked as in `rest`.
  static MonomialOrder elimination(const std::vector<Variable>& first, const MonomialOrder& rest);

  Kind kind() const { return kind_; }
  const std::string& key() const { return key_; }
  /// Short human-readable description, e.g. "elimination" or "lex".
  const std::string& label() const { return label_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Slot of the variable ranked k-th (k = 0 is the largest variable).
  int slot_at_rank(int k) const { return rank_to_slot_[k]; }
  int rank_of_slot(int slot) const { return slot_to_rank_[slot]; }

  /// Re-lays exponents so that raw lexicographic comparison realizes this
  /// order; `from_order_space` inverts it.
  Monomial to_order_space(const Monomial& m) const;
  Monomial from_order_space(const Monomial& m) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key_ == b.key_; }

 private:
  MonomialOrder(Kind kind, const std::vector<int>& leading_slots, std::string key);

  Kind kind_;
  std::array<std::uint8_t, kNumSlots> rank_to_slot_{};
  std::array<std::uint8_t, kNumSlots> slot_to_rank_{};
  bool identity_ = false;
  std::string key_;
  std::string label_;
};

struct Term {
  Rational coef;
  Monomial mono;
};

/// Sparse polynomial; terms are kept strictly descending in raw slot-lex
/// order with no zero coefficients, so structural equality is ideal equality
/// of elements.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(const Variable& v);
  static Polynomial z(int i, int j) { return variable(Variable::z(i, j)); }
  static Polynomial t() { return variable(Variable::t()); }
  static Polynomial s() { return variable(Variable::s()); }
  static Polynomial aux() { return variable(Variable::aux()); }
  static Polynomial term(const Rational& c, const Monomial& m);
  /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(std::vector<Term> terms);
  /// Adopts a term list that is already strictly descending and zero-free.
  static Polynomial from_sorted_terms(std::vector<Term> terms);
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;
  std::uint64_t support() const;
  bool uses(const Variable& v) const;

  /// The order-maximal term. Throws DomainError on the zero polynomial.
  const Term& leading_term(const MonomialOrder& ord) const;
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).mono;
  }
  /// Leading term in raw slot order (the first stored term).
  const Term& head() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// this - c*m*g, in one merge pass.
  Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(int e) const;

  Polynomial substitute(const Variable& v, const Polynomial& value) const;
  /// Ring homomorphism determined by the image of each variable.
  Polynomial map_variables(const std::function<Polynomial(const Variable&)>& image) const;
  /// Applies a slot permutation to every monomial (used for order spaces).
  Polynomial map_monomials(const std::function<Monomial(const Monomial&)>& f) const;

  /// Scales so the leading coefficient under `ord` is 1.
  Polynomial monic(const MonomialOrder& ord) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

}  // namespace hessex
