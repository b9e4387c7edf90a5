#include "hessex/xpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace hessex {

namespace {

int exps_degree(const XPolynomial::Exps& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

}  // namespace

XPolynomial::XPolynomial(long c) {
  if (c != 0) terms_[Exps{}] = c;
}

XPolynomial XPolynomial::x(int j) {
  if (j < 1 || j > kMaxMatrixSize) throw DomainError("x index out of range");
  Exps e{};
  e[j - 1] = 1;
  return monomial(e);
}

XPolynomial XPolynomial::monomial(const Exps& e, const Integer& c) {
  XPolynomial p;
  p.add_term(e, c);
  return p;
}

void XPolynomial::add_term(const Exps& e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int XPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exps_degree(e));
  return d;
}

int XPolynomial::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int k = exps_degree(e);
    if (d < 0 || k < d) d = k;
  }
  return d;
}

bool XPolynomial::is_homogeneous() const { return degree() == min_degree(); }

XPolynomial XPolynomial::homogeneous_part(int d) const {
  XPolynomial out;
  for (const auto& [e, c] : terms_)
    if (exps_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

bool XPolynomial::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
  XPolynomial r = *this;
  r += o;
  return r;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
  XPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
  XPolynomial r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Exps e{};
      for (int k = 0; k < kMaxMatrixSize; ++k) {
        int v = a[k] + b[k];
        if (v > 255) throw DomainError("exponent overflow");
        e[k] = static_cast<std::uint8_t>(v);
      }
      r.add_term(e, ca * cb);
    }
  return r;
}

XPolynomial XPolynomial::scale(const Integer& c) const {
  XPolynomial r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

XPolynomial XPolynomial::divided_difference(int i) const {
  if (i < 1 || i >= kMaxMatrixSize) throw DomainError("divided difference index out of range");
  int a = i - 1, b = i;
  XPolynomial r;
  for (const auto& [e, c] : terms_) {
    int p = e[a], q = e[b];
    if (p == q) continue;
    int lo = std::min(p, q), gap = std::abs(p - q);
    Integer sign = p > q ? 1 : -1;
    for (int k = 0; k < gap; ++k) {
      Exps f = e;
      f[a] = static_cast<std::uint8_t>(lo + gap - 1 - k);
      f[b] = static_cast<std::uint8_t>(lo + k);
      r.add_term(f, sign * c);
    }
  }
  return r;
}

std::string XPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c0] : terms_) {
    Integer c = c0;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string mono;
    for (int k = 0; k < kMaxMatrixSize; ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

XPolynomial XPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  XPolynomial out;
  std::size_t pos = 0;
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected integer in '" + s + "'");
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    Integer sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in '" + s + "'");
    }
    Integer c = 1;
    Exps e{};
    while (true) {
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        c *= Integer(digits());
      } else if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        int j = std::stoi(digits());
        if (j < 1 || j > kMaxMatrixSize) throw ParseError("x index out of range");
        int k = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          k = std::stoi(digits());
        }
        e[j - 1] = static_cast<std::uint8_t>(e[j - 1] + k);
      } else {
        throw ParseError("unexpected character in '" + s + "'");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out.add_term(e, sign * c);
  }
  return out;
}

}  // namespace hessex
