#pragma once

// Hessenberg functions, sheet lines and the ideals built from them.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hessex/idealops.hpp"
#include "hessex/polycore.hpp"

namespace hessex {

class HessenbergFunction {
 public:
  /// values[k] = h(k+1). Throws DomainError unless nondecreasing with
  /// k+1 <= h(k+1) <= n.
  explicit HessenbergFunction(std::vector<int> values);
  /// "2,4,4,4"; brackets and spaces are tolerated.
  static HessenbergFunction parse(std::string_view text);
  /// All Hessenberg functions of size n, lexicographically.
  static std::vector<HessenbergFunction> all(int n);
  static HessenbergFunction identity(int n);
  static HessenbergFunction full(int n);

  int n() const { return static_cast<int>(values_.size()); }
  /// h(i) for 0 <= i <= n, with h(0) = 0.
  int operator()(int i) const;
  const std::vector<int>& values() const { return values_; }

  /// Indices i with h(i) > h(i-1); always contains 1.
  std::vector<int> corners() const;
  bool is_corner(int i) const { return (*this)(i) > (*this)(i - 1); }
  /// Largest k with h(k) = h(i).
  int i_star(int i) const;
  /// Smallest k with h(k) = h(i).
  int i_lower(int i) const;
  bool is_indecomposable() const;
  /// {j < n : h(j) = j}.
  std::vector<int> decomposable_set() const;
  /// max over corners of h(i) - i.
  int max_corner_gap() const;
  int sum() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;

 private:
  std::vector<int> values_;
};

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Throws DomainError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct JordanBlock {
  Rational eigenvalue;
  Partition mu;
};

/// Eigenvalues with the partitions of their Jordan block sizes, kept in the
/// canonical order: smaller total size first, then lexicographically
/// smaller partition, then input order.
class JordanData {
 public:
  explicit JordanData(std::vector<JordanBlock> blocks);
  /// [{"eigenvalue": "1", "mu": [1]}, ...]; eigenvalues may be numbers or
  /// rational strings.
  static JordanData from_json(const nlohmann::json& j);
  /// diag(1, 0, ..., 0).
  static JordanData minimal_semisimple(int n);
  static JordanData nilpotent(const Partition& mu);
  /// diag(c_1, ..., c_n) with distinct c_i.
  static JordanData regular_semisimple(const std::vector<Rational>& eigenvalues);

  int n() const;
  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  nlohmann::json to_json() const;

 private:
  std::vector<JordanBlock> blocks_;
};

/// Rows listed top to bottom.
struct Tableau {
  std::vector<std::vector<int>> rows;
  /// Sizes of the per-eigenvalue tableaux in concatenation order; piece k
  /// holds the next run of consecutive labels. Empty means a single piece.
  std::vector<int> pieces;

  Partition shape() const;
  /// Entries are 1..N, rows increase and shrink downward, and every piece
  /// sits as one contiguous segment per row in which each entry exceeds
  /// every entry of that piece in the rows below.
  bool is_valid() const;
  std::string to_string() const;
};

/// Dense matrix of polynomials, 1-based access.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix zero(int n) { return PolyMatrix(n, n); }
  static PolyMatrix identity(int n);
  /// The matrix unit E_ij.
  static PolyMatrix unit(int n, int i, int j);
  static PolyMatrix diagonal(const std::vector<Rational>& d);
  /// Z = (z[i,j]).
  static PolyMatrix generic(int n);
  /// Row-major array of polynomial strings or numbers.
  static PolyMatrix from_json(const nlohmann::json& j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& at(int i, int j) { return a_[(i - 1) * cols_ + (j - 1)]; }
  const Polynomial& at(int i, int j) const { return a_[(i - 1) * cols_ + (j - 1)]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix scale(const Polynomial& c) const;
  PolyMatrix substitute(const Variable& v, const Polynomial& value) const;
  bool uses(const Variable& v) const;
  /// Each row and each column has at most one nonzero entry, and it is 1.
  bool is_partial_permutation() const;

  nlohmann::json to_json() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> a_;
};

/// Determinant by cofactor expansion over column subsets.
Polynomial determinant(const PolyMatrix& m);
/// det Z for the generic n x n matrix.
Polynomial generic_determinant(int n);

Partition lambda_of(const JordanData& jd);
Tableau build_tableau(const JordanData& jd);
/// Sum of E_lm over horizontally adjacent entries l, m of the tableau.
PolyMatrix associated_nilpotent(const JordanData& jd);
/// diag of the eigenvalues, each repeated by the size of its block.
PolyMatrix semisimple_part(const JordanData& jd);
/// t * semisimple part + associated nilpotent.
PolyMatrix sheet_line(const JordanData& jd);

/// diag(1, 0, ..., 0), E_1n, and the line t * diag(1, 0, ..., 0) + E_1n.
PolyMatrix minimal_semisimple_matrix(int n);
PolyMatrix minimal_nilpotent_matrix(int n);
PolyMatrix minimal_sheet_matrix(int n);

/// Ring for ideals over the square matrix x: z variables plus t when x uses t.
Ring ring_for(const PolyMatrix& x);

/// The (h(i)+1)-minors of [x v_1 ... x v_i | v_1 ... v_h(i)], v_j the columns
/// of the generic matrix. Row subsets are enumerated lexicographically, then
/// column subsets; zero and repeated (up to sign) minors are dropped. The
/// zero ideal when h(i) = n.
Ideal rank_condition_ideal(const PolyMatrix& x, const HessenbergFunction& h, int i);
/// Sum of the rank conditions at i* over the corners i.
Ideal hessenberg_ideal(const PolyMatrix& x, const HessenbergFunction& h);
/// Sum of the rank conditions over every i in [n].
Ideal hessenberg_ideal_full(const PolyMatrix& x, const HessenbergFunction& h);

/// Minor of Z on rows B (sorted, within 2..n) and columns 1..|B|.
Polynomial p_minor(int n, const std::vector<int>& rows);

/// <t z[1,k] + z[n,k] : k <= i> in Q[t, z].
Ideal J_t(int n, int i);
/// <a z[1,k] + z[n,k] : k <= i> in Q[z].
Ideal J_a(int n, int i, const Rational& a);
/// <z[n,1], ..., z[n,i]> in Q[z].
Ideal J_0(int n, int i);
/// <p_B : B in 2..n, |B| = j> in `ring`; the unit ideal for j = 0.
Ideal K(const Ring& ring, int j);
/// J_t(i-1) + K(h(i)) in Q[t, z].
Ideal P_t(const HessenbergFunction& h, int i);
/// J_a(i-1) + K(h(i)) in Q[z].
Ideal P_a(const HessenbergFunction& h, int i, const Rational& a);
/// Sum over corners of J_t(i*) * K(h(i)).
Ideal minimal_sheet_closed_form(const HessenbergFunction& h);

/// Substitutes t := a; the result lives in the ring without t.
Ideal ev(const Rational& a, const Ideal& I);
/// z[1,l] -> (z[1,l] - z[n,l]) / a, other variables fixed. a != 0.
Ideal psi(const Rational& a, const Ideal& I);
Polynomial psi(const Rational& a, int n, const Polynomial& p);

/// The generators of the families used in the Groebner-basis tables.
namespace sheetgen {
Polynomial g(int n, int k);        // t z[1,k] + z[n,k]
Polynomial h(int n, int k, int l);  // z[1,l] z[n,k] - z[1,k] z[n,l]
Polynomial f(int n, int k);        // s z[n,k] + z[1,k]
Polynomial st_minus_one();
/// {g_k : k <= i} u {h_kl : k < l <= i} u {f_k : k <= i} u {st - 1}.
std::vector<Polynomial> lower_set(int n, int i);
/// {p_B : |B| = j} u {st - 1}.
std::vector<Polynomial> upper_set(int n, int j);
/// Subsets of {2..n} of size j in lexicographic order.
std::vector<std::vector<int>> row_subsets(int n, int j);
}  // namespace sheetgen

}  // namespace hessex
