#include "hessex/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace hessex {

namespace {

std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p + 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::mutex g_schubert_mu;
std::map<std::vector<int>, XPolynomial> g_schubert_memo;

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  int n = this->n();
  if (n < 1) throw DomainError("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[v]) throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']') s += ch;
  if (s.empty()) throw ParseError("empty permutation");
  std::vector<int> v;
  if (s.find(',') != std::string::npos) {
    std::string cur;
    for (char ch : s + ",") {
      if (ch == ',') {
        if (cur.empty()) throw ParseError("empty entry in permutation '" + std::string(text) + "'");
        v.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else {
        throw ParseError("bad character in permutation '" + std::string(text) + "'");
      }
    }
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw ParseError("bad character in permutation '" + std::string(text) + "'");
      v.push_back(ch - '0');
    }
  }
  try {
    return Permutation(std::move(v));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = n - k;
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b) inv += w_[a] > w_[b];
  return inv;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw DomainError("permutation size mismatch");
  std::vector<int> v(n());
  for (int k = 1; k <= n(); ++k) v[k - 1] = (*this)(o(k));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(n());
  for (int k = 1; k <= n(); ++k) v[(*this)(k) - 1] = k;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int k = 0; k < n(); ++k) {
    if (n() > 9 && k) s += ',';
    s += std::to_string(w_[k]);
  }
  return s + "]";
}

int rank_fn(const Permutation& w, int p, int q) {
  int n = w.n();
  if (p < 1 || p > n || q < 1 || q > n) throw DomainError("rank function index out of range");
  int r = 0;
  for (int j = 1; j <= q; ++j) r += w(j) <= p;
  return r;
}

Ideal schubert_determinantal_ideal(const Permutation& w) {
  int n = w.n();
  if (n > kMaxMatrixSize) throw DomainError("permutation too large for the polynomial ring");
  std::vector<Polynomial> gens;
  std::unordered_set<std::string> seen;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      int k = rank_fn(w, p, q) + 1;
      if (k > std::min(p, q)) continue;
      for (const auto& rows : subsets(p, k))
        for (const auto& cols : subsets(q, k)) {
          PolyMatrix m(k, k);
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) m.at(a + 1, b + 1) = Polynomial::z(rows[a], cols[b]);
          Polynomial d = determinant(m);
          Polynomial key = d.head().coef < 0 ? -d : d;
          if (seen.insert(key.to_string()).second) gens.push_back(std::move(d));
        }
    }
  return Ideal(Ring::z_only(n), std::move(gens));
}

Permutation u_of(int n, int i) {
  if (i < 1 || i > n) throw DomainError("u index out of range");
  std::vector<int> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = k < i ? k + 1 : (k == i ? 1 : k);
  return Permutation(std::move(v));
}

Permutation v_of(int n, int j) {
  if (j < 1 || j > n) throw DomainError("v index out of range");
  std::vector<int> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = k < j ? k : (k == j ? n : k - 1);
  return Permutation(std::move(v));
}

Permutation w_of(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw DomainError("w needs distinct indices in 1..n");
  // Remaining positions take 2..n-1 in increasing order.
  std::vector<int> v(n);
  int next = 2;
  for (int k = 1; k <= n; ++k) v[k - 1] = k == i ? 1 : (k == j ? n : next++);
  return Permutation(std::move(v));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw DomainError("permutation size mismatch");
  std::vector<int> a, b;
  for (int k = 1; k <= u.n(); ++k) {
    a.insert(std::upper_bound(a.begin(), a.end(), u(k)), u(k));
    b.insert(std::upper_bound(b.begin(), b.end(), w(k)), w(k));
    for (int m = 0; m < k; ++m)
      if (a[m] > b[m]) return false;
  }
  return true;
}

Polynomial w0_act(int n, const Polynomial& p) {
  return p.map_variables([n](const Variable& v) {
    if (v.kind == Variable::Kind::Z) return Polynomial::z(n + 1 - v.row, v.col);
    return Polynomial::variable(v);
  });
}

Ideal w0_act(const Ideal& I) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(w0_act(I.ring().n, p));
  return Ideal(I.ring(), std::move(g));
}

XPolynomial schubert_polynomial(const Permutation& w) {
  int n = w.n();
  if (n > kMaxMatrixSize + 1) throw DomainError("permutation too large for Schubert polynomials");
  {
    std::lock_guard lock(g_schubert_mu);
    auto it = g_schubert_memo.find(w.one_line());
    if (it != g_schubert_memo.end()) return it->second;
  }
  XPolynomial out;
  int ascent = 0;
  for (int i = 1; i < n && !ascent; ++i)
    if (w(i) < w(i + 1)) ascent = i;
  if (!ascent) {
    // w0: the staircase monomial.
    XPolynomial::Exps e{};
    for (int i = 1; i < n; ++i) e[i - 1] = static_cast<std::uint8_t>(n - i);
    out = XPolynomial::monomial(e);
  } else {
    std::vector<int> up = w.one_line();
    std::swap(up[ascent - 1], up[ascent]);
    out = schubert_polynomial(Permutation(up)).divided_difference(ascent);
  }
  std::lock_guard lock(g_schubert_mu);
  g_schubert_memo.try_emplace(w.one_line(), out);
  return out;
}

XPolynomial class_formula(const HessenbergFunction& h) {
  int n = h.n();
  if (n < 3) throw DomainError("class formula needs n >= 3");
  XPolynomial out;
  if (h.is_identity()) {
    for (int i = 1; i <= n - 1; ++i) out += schubert_polynomial(w_of(n, i + 1, i));
    return out.scale(2);
  }
  int d = h.max_corner_gap();
  for (int i : h.corners())
    if (h(i) - i == d) out += schubert_polynomial(w_of(n, i, h(i)));
  return out;
}

}  // namespace hessex
