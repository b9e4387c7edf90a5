#pragma once

// Permutations, Schubert determinantal ideals and Schubert polynomials.

#include <string>
#include <string_view>
#include <vector>

#include "hessex/hessenberg.hpp"
#include "hessex/idealops.hpp"
#include "hessex/xpoly.hpp"

namespace hessex {

class Permutation {
 public:
  /// One-line notation w(1), ..., w(n).
  explicit Permutation(std::vector<int> one_line);
  /// "[2,1,3,4,5]", "[21345]" or "21345" (compact forms need n <= 9).
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);
  /// w0 = [n, n-1, ..., 1].
  static Permutation longest(int n);
  /// All of S_n in lexicographic order.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  /// Number of inversions.
  int length() const;
  /// Composition: (a * b)(k) = a(b(k)).
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;

  /// Compact "[2134]" for n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

/// |{w(1), ..., w(q)} ∩ [p]|: the rank of the northwest p x q block of the
/// permutation matrix with a 1 in row w(j) of column j.
int rank_fn(const Permutation& w, int p, int q);

/// Minors of size 1 + rank_fn(w, p, q) of every northwest p x q block of Z.
Ideal schubert_determinantal_ideal(const Permutation& w);

/// Shortest u with u(i) = 1.
Permutation u_of(int n, int i);
/// Shortest v with v(j) = n.
Permutation v_of(int n, int j);
/// Shortest w with w(i) = 1 and w(j) = n; i != j. Equals u_of(i) * v_of(j)
/// when i < j.
Permutation w_of(int n, int i, int j);

/// Tableau criterion: sorted w'(1..k) <= sorted w(1..k) entrywise for all k.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// z[i,j] -> z[n+1-i, j].
Polynomial w0_act(int n, const Polynomial& p);
Ideal w0_act(const Ideal& I);

/// Divided differences from x1^(n-1) x2^(n-2) ... x_(n-1); memoized.
XPolynomial schubert_polynomial(const Permutation& w);

/// The predicted class of the Hessenberg variety over the minimal sheet:
/// 2 * sum_i S_{w[i+1,i]} for the identity h, otherwise the sum of
/// S_{w[i,h(i)]} over corners i with h(i) - i maximal. Needs n >= 3.
XPolynomial class_formula(const HessenbergFunction& h);

}  // namespace hessex
