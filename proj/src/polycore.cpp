#include "hessex/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hessex {

// ---------------------------------------------------------------- Variable

Variable Variable::z(int i, int j) {
  if (i < 1 || j < 1 || i > kMaxMatrixSize || j > kMaxMatrixSize)
    throw DomainError("z index out of range: z[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return {Kind::Z, i, j};
}

Variable Variable::from_slot(int slot) {
  switch (slot) {
    case kSlotAux: return aux();
    case kSlotS: return s();
    case kSlotT: return t();
    default: {
      int k = slot - 3;
      return z(k / kMaxMatrixSize + 1, k % kMaxMatrixSize + 1);
    }
  }
}

int Variable::slot() const {
  switch (kind) {
    case Kind::Aux: return kSlotAux;
    case Kind::S: return kSlotS;
    case Kind::T: return kSlotT;
    case Kind::Z: return 3 + (row - 1) * kMaxMatrixSize + (col - 1);
  }
  return -1;
}

std::string Variable::name() const {
  switch (kind) {
    case Kind::Aux: return "w";
    case Kind::S: return "s";
    case Kind::T: return "t";
    case Kind::Z: return "z[" + std::to_string(row) + "," + std::to_string(col) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------- Ring

Ring Ring::z_only(int n) {
  Ring r;
  r.n = n;
  r.validate();
  return r;
}

Ring Ring::with_t(int n) {
  Ring r = z_only(n);
  r.has_t = true;
  return r;
}

int Ring::num_variables() const { return n * n + has_t + has_s + has_aux; }

std::vector<Variable> Ring::variables() const {
  std::vector<Variable> out;
  if (has_aux) out.push_back(Variable::aux());
  if (has_s) out.push_back(Variable::s());
  if (has_t) out.push_back(Variable::t());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(Variable::z(i, j));
  return out;
}

bool Ring::contains(const Variable& v) const {
  switch (v.kind) {
    case Variable::Kind::Aux: return has_aux;
    case Variable::Kind::S: return has_s;
    case Variable::Kind::T: return has_t;
    case Variable::Kind::Z: return v.row >= 1 && v.col >= 1 && v.row <= n && v.col <= n;
  }
  return false;
}

void Ring::validate() const {
  if (n < 1 || n > kMaxMatrixSize)
    throw DomainError("matrix size must lie in [1, " + std::to_string(kMaxMatrixSize) + "], got " +
                      std::to_string(n));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(const Variable& v, int exponent) {
  Monomial m;
  m.set_exponent(v.slot(), exponent);
  return m;
}

void Monomial::set_exponent(int slot, int value) {
  if (value < 0 || value > 255) throw DomainError("exponent out of range");
  e_[slot] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (auto x : e_)
    if (x > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  unsigned bad = 0;
  for (std::size_t k = 0; k < e_.size(); ++k) bad |= (e_[k] > other.e_[k]);
  return bad == 0;
}

bool Monomial::coprime(const Monomial& other) const {
  return (support() & other.support()) == 0;
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (int k = 0; k < kNumSlots; ++k) s |= std::uint64_t(e_[k] != 0) << k;
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  unsigned over = 0;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    unsigned v = unsigned(e_[k]) + other.e_[k];
    over |= v;
    r.e_[k] = static_cast<std::uint8_t>(v);
  }
  if (over > 255) throw DomainError("exponent overflow");
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (divisor.e_[k] > e_[k]) throw DomainError("inexact monomial division");
    r.e_[k] = static_cast<std::uint8_t>(e_[k] - divisor.e_[k]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = std::max(e_[k], other.e_[k]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = std::min(e_[k], other.e_[k]);
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int k = 0; k < kNumSlots; ++k) {
    if (!e_[k]) continue;
    if (!out.empty()) out += '*';
    out += Variable::from_slot(k).name();
    if (e_[k] > 1) out += "^" + std::to_string(e_[k]);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : e_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) { return a.lcm(b); }

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, const std::vector<int>& leading_slots, std::string key)
    : kind_(kind), key_(std::move(key)) {
  std::array<bool, kNumSlots> used{};
  int r = 0;
  for (int s : leading_slots) {
    if (s < 0 || s >= kNumSlots || used[s]) throw DomainError("order sequence repeats a variable");
    used[s] = true;
    rank_to_slot_[r++] = static_cast<std::uint8_t>(s);
  }
  for (int s = 0; s < kNumSlots; ++s)
    if (!used[s]) rank_to_slot_[r++] = static_cast<std::uint8_t>(s);
  identity_ = true;
  for (int k = 0; k < kNumSlots; ++k) {
    slot_to_rank_[rank_to_slot_[k]] = static_cast<std::uint8_t>(k);
    if (rank_to_slot_[k] != k) identity_ = false;
  }
}

MonomialOrder MonomialOrder::lex(const std::vector<Variable>& sequence) {
  std::vector<int> slots;
  for (const auto& v : sequence) slots.push_back(v.slot());
  MonomialOrder ord(Kind::Lex, slots, "");
  // The key is the full ranking so equal orders compare equal however built.
  std::string full = "lex:";
  for (int k = 0; k < kNumSlots; ++k) full += std::to_string(ord.rank_to_slot_[k]) + ".";
  ord.key_ = full;
  ord.label_ = "lex";
  return ord;
}

MonomialOrder MonomialOrder::lex_default() { return lex({}); }

MonomialOrder MonomialOrder::elimination(int n) {
  std::vector<Variable> seq{Variable::aux(), Variable::s(), Variable::t()};
  for (int j = n; j >= 1; --j) seq.push_back(Variable::z(1, j));
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= n; ++j) seq.push_back(Variable::z(i, j));
  MonomialOrder ord = lex(seq);
  ord.kind_ = Kind::Elimination;
  ord.label_ = "elimination";
  return ord;
}

MonomialOrder MonomialOrder::diagonal_twist(int n, const std::vector<int>& row_order) {
  if (static_cast<int>(row_order.size()) != n) throw DomainError("row order must list every row");
  std::vector<Variable> seq{Variable::aux(), Variable::s(), Variable::t()};
  std::vector<bool> seen(n + 1, false);
  for (int r : row_order) {
    if (r < 1 || r > n || seen[r]) throw DomainError("row order is not a permutation");
    seen[r] = true;
    for (int j = 1; j <= n; ++j) seq.push_back(Variable::z(r, j));
  }
  MonomialOrder ord = lex(seq);
  ord.kind_ = Kind::DiagonalTwist;
  ord.label_ = "rows(";
  for (std::size_t k = 0; k < row_order.size(); ++k)
    ord.label_ += (k ? "," : "") + std::to_string(row_order[k]);
  ord.label_ += ")";
  return ord;
}

MonomialOrder MonomialOrder::elimination(const std::vector<Variable>& first, const MonomialOrder& rest) {
  std::vector<Variable> seq = first;
  for (int k = 0; k < kNumSlots; ++k) {
    Variable v = Variable::from_slot(rest.rank_to_slot_[k]);
    if (std::find(first.begin(), first.end(), v) == first.end()) seq.push_back(v);
  }
  MonomialOrder ord = lex(seq);
  ord.kind_ = rest.kind_;
  ord.label_ = "elim(";
  for (std::size_t k = 0; k < first.size(); ++k) ord.label_ += (k ? "," : "") + first[k].name();
  ord.label_ += ";" + rest.label_ + ")";
  return ord;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (identity_) return a <=> b;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (int k = 0; k < kNumSlots; ++k) {
    int s = rank_to_slot_[k];
    if (ea[s] != eb[s]) return ea[s] < eb[s] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Monomial MonomialOrder::to_order_space(const Monomial& m) const {
  if (identity_) return m;
  Monomial r;
  for (int k = 0; k < kNumSlots; ++k) r.set_exponent(k, m.exponent(rank_to_slot_[k]));
  return r;
}

Monomial MonomialOrder::from_order_space(const Monomial& m) const {
  if (identity_) return m;
  Monomial r;
  for (int k = 0; k < kNumSlots; ++k) r.set_exponent(rank_to_slot_[k], m.exponent(k));
  return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({c, Monomial()});
}

Polynomial Polynomial::variable(const Variable& v) { return term(1, Monomial::of(v)); }

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::support() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

bool Polynomial::uses(const Variable& v) const { return (support() >> v.slot()) & 1u; }

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of zero");
  std::size_t best = 0;
  for (std::size_t k = 1; k < terms_.size(); ++k)
    if (ord.greater(terms_[k].mono, terms_[best].mono)) best = k;
  return terms_[best];
}

const Term& Polynomial::head() const {
  if (terms_.empty()) throw DomainError("leading term of zero");
  return terms_[0];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merges a + sign*b where both are strictly descending term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coef = -out.back().coef;
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return from_sorted_terms(merge(terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return from_sorted_terms(merge(terms_, o.terms_, true));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  Polynomial acc;
  for (const auto& t : small.terms_) acc = acc + big.mul_term(t.coef, t.mono);
  return acc;
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coef * c, t.mono * m});
  return r;
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      bm = b[j].mono * m;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() && have_b) {
    auto cmp = a[i].mono <=> bm;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({-(c * b[j].coef), bm});
      ++j;
      load_b();
    } else {
      Rational s = a[i].coef - c * b[j].coef;
      if (s != 0) out.push_back({std::move(s), bm});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_b) {
    out.push_back({-(c * b[j].coef), bm});
    ++j;
    load_b();
  }
  return from_sorted_terms(std::move(out));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  Polynomial r(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const Variable& v, const Polynomial& value) const {
  return map_variables([&](const Variable& u) { return u == v ? value : Polynomial::variable(u); });
}

Polynomial Polynomial::map_variables(const std::function<Polynomial(const Variable&)>& image) const {
  std::array<std::vector<Polynomial>, kNumSlots> powers;  // powers[slot][e] = image^e
  Polynomial acc;
  for (const auto& t : terms_) {
    Polynomial prod(t.coef);
    for (int k = 0; k < kNumSlots && !prod.is_zero(); ++k) {
      int e = t.mono.exponent(k);
      if (!e) continue;
      auto& pw = powers[k];
      if (pw.empty()) {
        pw.push_back(Polynomial(1));
        pw.push_back(image(Variable::from_slot(k)));
      }
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
      prod = prod * pw[e];
    }
    acc += prod;
  }
  return acc;
}

Polynomial Polynomial::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coef, f(t.mono)});
  return from_terms(std::move(out));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return {};
  Rational lc = leading_term(ord).coef;
  if (lc == 1) return *this;
  return scale(1 / lc);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty number");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw ParseError("malformed number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed number '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator");
  q.canonicalize();
  return q;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg) out += '-';
    else if (k) out += '+';
    if (t.mono.is_one()) {
      out += rational_to_string(c);
    } else {
      if (c != 1) out += rational_to_string(c) + "*";
      out += t.mono.to_string();
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coef != b.terms_[k].coef) return false;
  return true;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  Polynomial run() {
    if (text_.empty()) throw ParseError("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < text_.size() || first) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      t.coef *= sign;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  Term term() {
    Term t{1, Monomial()};
    factor(t);
    while (peek() == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      t.coef *= parse_rational(std::string_view(text_).substr(start, pos_ - start));
      return;
    }
    Variable v;
    if (c == 't') {
      v = Variable::t();
      ++pos_;
    } else if (c == 's') {
      v = Variable::s();
      ++pos_;
    } else if (c == 'w') {
      v = Variable::aux();
      ++pos_;
    } else if (c == 'z') {
      ++pos_;
      expect('[');
      int i = integer();
      expect(',');
      int j = integer();
      expect(']');
      if (i < 1 || j < 1 || i > kMaxMatrixSize || j > kMaxMatrixSize) fail("z index out of range");
      v = Variable::z(i, j);
    } else {
      fail("unexpected character");
    }
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      e = integer();
    }
    Monomial m = Monomial::of(v, 0);
    m.set_exponent(v.slot(), e);
    t.mono = t.mono * m;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace hessex
