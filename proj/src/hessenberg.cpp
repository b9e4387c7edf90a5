#include "hessex/hessenberg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace hessex {

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> s;
    for (int a : idx) s.push_back(pool[a]);
    out.push_back(std::move(s));
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

// All k-minors of the columns of m restricted to `rows`, via a table over
// column subsets. dp[mask] is the minor on rows[0..|mask|-1] and columns mask.
void minors_for_rows(const PolyMatrix& m, const std::vector<int>& rows, int k,
                     std::vector<Polynomial>& dp) {
  int c = m.cols();
  dp.assign(std::size_t(1) << c, Polynomial());
  dp[0] = Polynomial(1);
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    int size = std::popcount(mask);
    if (size > k) continue;
    int r = rows[size - 1];
    Polynomial acc;
    int above = 0;  // columns in mask to the right of the current one
    for (int col = c - 1; col >= 0; --col) {
      if (!(mask >> col & 1)) continue;
      const Polynomial& entry = m.at(r, col + 1);
      const Polynomial& sub = dp[mask & ~(1u << col)];
      if (!entry.is_zero() && !sub.is_zero()) {
        Polynomial term = entry * sub;
        if (above % 2) acc -= term;
        else acc += term;
      }
      ++above;
    }
    dp[mask] = std::move(acc);
  }
}

std::string sign_free_key(const Polynomial& p) {
  return (p.head().coef < 0 ? -p : p).to_string();
}

}  // namespace

// ---------------------------------------------------------------- Hessenberg functions

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  int n = this->n();
  if (n < 1 || n > kMaxMatrixSize) throw DomainError("Hessenberg function size must be in 1.." +
                                                     std::to_string(kMaxMatrixSize));
  for (int i = 1; i <= n; ++i) {
    int v = values_[i - 1];
    if (v < i || v > n) throw DomainError("not a Hessenberg function: h(" + std::to_string(i) + ") = " +
                                          std::to_string(v));
    if (i > 1 && v < values_[i - 2]) throw DomainError("Hessenberg function must be nondecreasing");
  }
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  std::vector<int> vals;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    vals.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      flush();
    } else {
      throw ParseError("bad character in Hessenberg function '" + std::string(text) + "'");
    }
  }
  flush();
  if (vals.empty()) throw ParseError("empty Hessenberg function");
  return HessenbergFunction(std::move(vals));
}

std::vector<HessenbergFunction> HessenbergFunction::all(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> v(n);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i > n) {
      out.emplace_back(v);
      return;
    }
    for (int x = std::max(lo, i); x <= n; ++x) {
      v[i - 1] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 1, 1);
  return out;
}

HessenbergFunction HessenbergFunction::identity(int n) { return HessenbergFunction(range(1, n)); }

HessenbergFunction HessenbergFunction::full(int n) { return HessenbergFunction(std::vector<int>(n, n)); }

int HessenbergFunction::operator()(int i) const {
  if (i == 0) return 0;
  if (i < 0 || i > n()) throw DomainError("Hessenberg index out of range");
  return values_[i - 1];
}

std::vector<int> HessenbergFunction::corners() const {
  std::vector<int> c;
  for (int i = 1; i <= n(); ++i)
    if (is_corner(i)) c.push_back(i);
  return c;
}

int HessenbergFunction::i_star(int i) const {
  int v = (*this)(i), k = i;
  while (k < n() && (*this)(k + 1) == v) ++k;
  return k;
}

int HessenbergFunction::i_lower(int i) const {
  int v = (*this)(i), k = i;
  while (k > 1 && (*this)(k - 1) == v) --k;
  return k;
}

bool HessenbergFunction::is_indecomposable() const { return decomposable_set().empty(); }

std::vector<int> HessenbergFunction::decomposable_set() const {
  std::vector<int> d;
  for (int j = 1; j < n(); ++j)
    if ((*this)(j) == j) d.push_back(j);
  return d;
}

int HessenbergFunction::max_corner_gap() const {
  int best = 0;
  for (int i : corners()) best = std::max(best, (*this)(i) - i);
  return best;
}

int HessenbergFunction::sum() const { return std::accumulate(values_.begin(), values_.end(), 0); }

bool HessenbergFunction::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string HessenbergFunction::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) s += (k ? "," : "") + std::to_string(values_[k]);
  return s;
}

// ---------------------------------------------------------------- partitions, Jordan data, tableaux

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw DomainError("empty partition");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw DomainError("partition parts must be positive");
    if (k && parts[k] > parts[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
  return s + ")";
}

JordanData::JordanData(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("Jordan data needs at least one eigenvalue");
  for (std::size_t a = 0; a < blocks_.size(); ++a)
    for (std::size_t b = a + 1; b < blocks_.size(); ++b)
      if (blocks_[a].eigenvalue == blocks_[b].eigenvalue)
        throw DomainError("repeated eigenvalue " + rational_to_string(blocks_[a].eigenvalue));
  // Equal partitions keep their input order, e.g. regular semisimple data.
  std::stable_sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& x, const JordanBlock& y) {
    int sx = x.mu.size(), sy = y.mu.size();
    if (sx != sy) return sx < sy;
    return std::lexicographical_compare(x.mu.parts.begin(), x.mu.parts.end(), y.mu.parts.begin(),
                                        y.mu.parts.end());
  });
  if (n() > kMaxMatrixSize) throw DomainError("matrix size exceeds " + std::to_string(kMaxMatrixSize));
}

JordanData JordanData::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("Jordan data must be a JSON array");
  std::vector<JordanBlock> blocks;
  for (const auto& b : j) {
    if (!b.contains("eigenvalue") || !b.contains("mu")) throw ParseError("Jordan block needs eigenvalue and mu");
    const auto& e = b["eigenvalue"];
    Rational c = e.is_string() ? parse_rational(e.get<std::string>())
                 : e.is_number_integer() ? Rational(e.get<long>())
                                         : throw ParseError("eigenvalue must be an integer or a rational string");
    blocks.push_back({c, Partition(b["mu"].get<std::vector<int>>())});
  }
  return JordanData(std::move(blocks));
}

JordanData JordanData::minimal_semisimple(int n) {
  return JordanData({{Rational(1), Partition({1})}, {Rational(0), Partition(std::vector<int>(n - 1, 1))}});
}

JordanData JordanData::nilpotent(const Partition& mu) { return JordanData({{Rational(0), mu}}); }

JordanData JordanData::regular_semisimple(const std::vector<Rational>& eigenvalues) {
  std::vector<JordanBlock> blocks;
  for (const auto& c : eigenvalues) blocks.push_back({c, Partition({1})});
  return JordanData(std::move(blocks));
}

int JordanData::n() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.mu.size();
  return n;
}

nlohmann::json JordanData::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& b : blocks_) j.push_back({{"eigenvalue", rational_to_string(b.eigenvalue)}, {"mu", b.mu.parts}});
  return j;
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return Partition(p);
}

bool Tableau::is_valid() const {
  int total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (rows[r][c] <= rows[r][c - 1]) return false;
    total += static_cast<int>(rows[r].size());
  }
  std::vector<int> sizes = pieces.empty() ? std::vector<int>{total} : pieces;
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != total) return false;
  std::vector<bool> seen(total + 1, false);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > total || seen[v]) return false;
      seen[v] = true;
    }
  // Walk the pieces left to right; each row must list a piece's labels
  // contiguously, after those of earlier pieces.
  std::vector<std::size_t> col(rows.size(), 0);
  int lo = 1;
  for (int size : sizes) {
    int hi = lo + size - 1;
    std::vector<std::vector<int>> part;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<int> seg;
      while (col[r] < rows[r].size() && rows[r][col[r]] >= lo && rows[r][col[r]] <= hi) seg.push_back(rows[r][col[r]++]);
      if (seg.empty()) break;
      part.push_back(std::move(seg));
    }
    int count = 0;
    for (std::size_t r = 0; r < part.size(); ++r) {
      count += static_cast<int>(part[r].size());
      if (r && part[r].size() > part[r - 1].size()) return false;
      if (r && part[r].back() >= part[r - 1].front()) return false;
    }
    if (count != size) return false;
    lo = hi + 1;
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (col[r] != rows[r].size()) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? "," : "") + std::to_string(rows[r][c]);
    s += "]";
  }
  return s + "]";
}

Partition lambda_of(const JordanData& jd) {
  std::vector<int> lam;
  for (const auto& b : jd.blocks()) {
    if (lam.size() < b.mu.parts.size()) lam.resize(b.mu.parts.size(), 0);
    for (std::size_t k = 0; k < b.mu.parts.size(); ++k) lam[k] += b.mu.parts[k];
  }
  return Partition(lam);
}

Tableau build_tableau(const JordanData& jd) {
  Tableau out;
  int next = 1;
  for (const auto& b : jd.blocks()) {
    const auto& mu = b.mu.parts;
    // Label this block's rows bottom to top, each left to right.
    std::vector<std::vector<int>> rows(mu.size());
    for (int r = static_cast<int>(mu.size()) - 1; r >= 0; --r)
      for (int c = 0; c < mu[r]; ++c) rows[r].push_back(next++);
    if (out.rows.size() < rows.size()) out.rows.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      out.rows[r].insert(out.rows[r].end(), rows[r].begin(), rows[r].end());
    out.pieces.push_back(b.mu.size());
  }
  return out;
}

// ---------------------------------------------------------------- matrices

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial(1);
  return m;
}

PolyMatrix PolyMatrix::unit(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("matrix unit index out of range");
  PolyMatrix m(n, n);
  m.at(i, j) = Polynomial(1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Rational>& d) {
  int n = static_cast<int>(d.size());
  PolyMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial(d[i - 1]);
  return m;
}

PolyMatrix PolyMatrix::generic(int n) {
  PolyMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = Polynomial::z(i, j);
  return m;
}

PolyMatrix PolyMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  int n = static_cast<int>(j.size());
  PolyMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) throw ParseError("matrix must be square");
    for (int c = 0; c < n; ++c) {
      const auto& e = j[r][c];
      if (e.is_string()) m.at(r + 1, c + 1) = Polynomial::parse(e.get<std::string>());
      else if (e.is_number_integer()) m.at(r + 1, c + 1) = Polynomial(e.get<long>());
      else throw ParseError("matrix entries must be integers or polynomial strings");
    }
  }
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix size mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= o.cols_; ++j) {
      Polynomial acc;
      for (int k = 1; k <= cols_; ++k)
        if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix PolyMatrix::scale(const Polynomial& c) const {
  PolyMatrix r = *this;
  for (auto& e : r.a_) e = e * c;
  return r;
}

PolyMatrix PolyMatrix::substitute(const Variable& v, const Polynomial& value) const {
  PolyMatrix r = *this;
  for (auto& e : r.a_) e = e.substitute(v, value);
  return r;
}

bool PolyMatrix::uses(const Variable& v) const {
  return std::any_of(a_.begin(), a_.end(), [&](const Polynomial& p) { return p.uses(v); });
}

bool PolyMatrix::is_partial_permutation() const {
  for (int i = 1; i <= rows_; ++i) {
    int ones = 0;
    for (int j = 1; j <= cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      if (!(at(i, j) == Polynomial(1))) return false;
      ++ones;
    }
    if (ones > 1) return false;
  }
  for (int j = 1; j <= cols_; ++j) {
    int ones = 0;
    for (int i = 1; i <= rows_; ++i) ones += !at(i, j).is_zero();
    if (ones > 1) return false;
  }
  return true;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 1; i <= rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= cols_; ++c) row.push_back(at(i, c).to_string());
    j.push_back(row);
  }
  return j;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial(1);
  if (m.cols() > 16) throw DomainError("matrix too large for cofactor expansion");
  std::vector<Polynomial> dp;
  minors_for_rows(m, range(1, m.rows()), m.rows(), dp);
  return dp[(std::size_t(1) << m.cols()) - 1];
}

Polynomial generic_determinant(int n) { return determinant(PolyMatrix::generic(n)); }

PolyMatrix associated_nilpotent(const JordanData& jd) {
  int n = jd.n();
  PolyMatrix m(n, n);
  for (const auto& row : build_tableau(jd).rows)
    for (std::size_t c = 1; c < row.size(); ++c) m.at(row[c - 1], row[c]) = Polynomial(1);
  return m;
}

PolyMatrix semisimple_part(const JordanData& jd) {
  std::vector<Rational> d;
  for (const auto& b : jd.blocks())
    for (int k = 0; k < b.mu.size(); ++k) d.push_back(b.eigenvalue);
  return PolyMatrix::diagonal(d);
}

PolyMatrix sheet_line(const JordanData& jd) {
  return semisimple_part(jd).scale(Polynomial::t()) + associated_nilpotent(jd);
}

PolyMatrix minimal_semisimple_matrix(int n) { return PolyMatrix::unit(n, 1, 1); }

PolyMatrix minimal_nilpotent_matrix(int n) { return PolyMatrix::unit(n, 1, n); }

PolyMatrix minimal_sheet_matrix(int n) {
  return PolyMatrix::unit(n, 1, 1).scale(Polynomial::t()) + PolyMatrix::unit(n, 1, n);
}

// ---------------------------------------------------------------- rank conditions

Ring ring_for(const PolyMatrix& x) {
  if (x.rows() != x.cols()) throw DomainError("expected a square matrix");
  return x.uses(Variable::t()) ? Ring::with_t(x.rows()) : Ring::z_only(x.rows());
}

Ideal rank_condition_ideal(const PolyMatrix& x, const HessenbergFunction& h, int i) {
  int n = h.n();
  if (x.rows() != n || x.cols() != n) throw DomainError("matrix size differs from Hessenberg function size");
  if (i < 1 || i > n) throw DomainError("rank condition index out of range");
  Ring ring = ring_for(x);
  int hi = h(i);
  if (hi == n) return Ideal::zero(ring);
  PolyMatrix Z = PolyMatrix::generic(n);
  PolyMatrix XZ = x * Z;
  PolyMatrix big(n, i + hi);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= i; ++c) big.at(r, c) = XZ.at(r, c);
    for (int c = 1; c <= hi; ++c) big.at(r, i + c) = Z.at(r, c);
  }
  int k = hi + 1;
  std::vector<Polynomial> gens;
  std::unordered_set<std::string> seen;
  std::vector<Polynomial> dp;
  auto col_sets = subsets(range(0, i + hi - 1), k);
  for (const auto& rows : subsets(range(1, n), k)) {
    minors_for_rows(big, rows, k, dp);
    for (const auto& cols : col_sets) {
      unsigned mask = 0;
      for (int c : cols) mask |= 1u << c;
      const Polynomial& m = dp[mask];
      if (m.is_zero()) continue;
      if (seen.insert(sign_free_key(m)).second) gens.push_back(m);
    }
  }
  return Ideal(ring, std::move(gens));
}

Ideal hessenberg_ideal(const PolyMatrix& x, const HessenbergFunction& h) {
  Ideal out = Ideal::zero(ring_for(x));
  for (int i : h.corners()) out = ideal_sum(out, rank_condition_ideal(x, h, h.i_star(i)));
  return out;
}

Ideal hessenberg_ideal_full(const PolyMatrix& x, const HessenbergFunction& h) {
  Ideal out = Ideal::zero(ring_for(x));
  for (int i = 1; i <= h.n(); ++i) out = ideal_sum(out, rank_condition_ideal(x, h, i));
  return out;
}

// ---------------------------------------------------------------- special ideals

Polynomial p_minor(int n, const std::vector<int>& rows) {
  int j = static_cast<int>(rows.size());
  PolyMatrix m(j, j);
  for (int a = 0; a < j; ++a) {
    if (rows[a] < 1 || rows[a] > n) throw DomainError("minor row out of range");
    for (int c = 1; c <= j; ++c) m.at(a + 1, c) = Polynomial::z(rows[a], c);
  }
  return determinant(m);
}

Ideal J_t(int n, int i) {
  if (i < 0 || i > n) throw DomainError("J index out of range");
  std::vector<Polynomial> g;
  for (int k = 1; k <= i; ++k) g.push_back(sheetgen::g(n, k));
  return Ideal(Ring::with_t(n), std::move(g));
}

Ideal J_a(int n, int i, const Rational& a) {
  if (i < 0 || i > n) throw DomainError("J index out of range");
  std::vector<Polynomial> g;
  for (int k = 1; k <= i; ++k) g.push_back(a * Polynomial::z(1, k) + Polynomial::z(n, k));
  return Ideal(Ring::z_only(n), std::move(g));
}

Ideal J_0(int n, int i) { return J_a(n, i, 0); }

Ideal K(const Ring& ring, int j) {
  int n = ring.n;
  if (j < 0 || j > n) throw DomainError("K index out of range");
  if (j == 0) return Ideal::unit(ring);
  std::vector<Polynomial> g;
  for (const auto& B : sheetgen::row_subsets(n, j)) g.push_back(p_minor(n, B));
  return Ideal(ring, std::move(g));
}

Ideal P_t(const HessenbergFunction& h, int i) {
  return ideal_sum(J_t(h.n(), i - 1), K(Ring::with_t(h.n()), h(i)));
}

Ideal P_a(const HessenbergFunction& h, int i, const Rational& a) {
  return ideal_sum(J_a(h.n(), i - 1, a), K(Ring::z_only(h.n()), h(i)));
}

Ideal minimal_sheet_closed_form(const HessenbergFunction& h) {
  int n = h.n();
  Ring ring = Ring::with_t(n);
  Ideal out = Ideal::zero(ring);
  for (int i : h.corners()) out = ideal_sum(out, ideal_product(J_t(n, h.i_star(i)), K(ring, h(i))));
  return out;
}

Ideal ev(const Rational& a, const Ideal& I) {
  Ring r = I.ring();
  if (!r.has_t) return I;
  r.has_t = false;
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(p.substitute(Variable::t(), Polynomial(a)));
  return Ideal(r, std::move(g));
}

Polynomial psi(const Rational& a, int n, const Polynomial& p) {
  if (a == 0) throw DomainError("psi needs a nonzero parameter");
  Rational inv = 1 / a;
  return p.map_variables([&](const Variable& v) {
    if (v.kind == Variable::Kind::Z && v.row == 1) return inv * (Polynomial::z(1, v.col) - Polynomial::z(n, v.col));
    return Polynomial::variable(v);
  });
}

Ideal psi(const Rational& a, const Ideal& I) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(psi(a, I.ring().n, p));
  return Ideal(I.ring(), std::move(g));
}

// ---------------------------------------------------------------- table generators

namespace sheetgen {

Polynomial g(int n, int k) { return Polynomial::t() * Polynomial::z(1, k) + Polynomial::z(n, k); }

Polynomial h(int n, int k, int l) {
  return Polynomial::z(1, l) * Polynomial::z(n, k) - Polynomial::z(1, k) * Polynomial::z(n, l);
}

Polynomial f(int n, int k) { return Polynomial::s() * Polynomial::z(n, k) + Polynomial::z(1, k); }

Polynomial st_minus_one() { return Polynomial::s() * Polynomial::t() - Polynomial(1); }

std::vector<Polynomial> lower_set(int n, int i) {
  std::vector<Polynomial> out;
  for (int k = 1; k <= i; ++k) out.push_back(g(n, k));
  for (int k = 1; k <= i; ++k)
    for (int l = k + 1; l <= i; ++l) out.push_back(h(n, k, l));
  for (int k = 1; k <= i; ++k) out.push_back(f(n, k));
  out.push_back(st_minus_one());
  return out;
}

std::vector<Polynomial> upper_set(int n, int j) {
  std::vector<Polynomial> out;
  for (const auto& B : row_subsets(n, j)) out.push_back(p_minor(n, B));
  out.push_back(st_minus_one());
  return out;
}

std::vector<std::vector<int>> row_subsets(int n, int j) { return subsets(range(2, n), j); }

}  // namespace sheetgen

}  // namespace hessex
