#include "artin/polynomial.hpp"

#include "artin/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace artin {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::VariableMismatch: return "VariableMismatch";
  case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
  case ErrorCode::TrivialAlgebra: return "TrivialAlgebra";
  case ErrorCode::NotLocalOverQ: return "NotLocalOverQ";
  case ErrorCode::NotGraded: return "NotGraded";
  case ErrorCode::PrincipalAlgebra: return "PrincipalAlgebra";
  case ErrorCode::NotGorenstein: return "NotGorenstein";
  case ErrorCode::RelationViolated: return "RelationViolated";
  case ErrorCode::DependentInput: return "DependentInput";
  case ErrorCode::WitnessInsufficient: return "WitnessInsufficient";
  case ErrorCode::NotDegreeOne: return "NotDegreeOne";
  case ErrorCode::IncompatibleAlgebras: return "IncompatibleAlgebras";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

std::string to_string(const Rational &q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial &other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial &other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

// --- MonomialOrder ----------------------------------------------------------

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      throw Error(ErrorCode::InvalidArgument, "order precedence is not a permutation of the variables");
}

namespace {

std::vector<std::size_t> later_first(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    p[i] = nvars - 1 - i;
  return p;
}

} // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return MonomialOrder(OrderKind::GradedReverseLex, later_first(nvars));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return MonomialOrder(OrderKind::Lex, later_first(nvars)); }

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  if (kind_ == OrderKind::Lex) {
    for (std::size_t v : precedence_)
      if (a[v] != b[v])
        return a[v] > b[v] ? 1 : -1;
    return 0;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db)
    return da > db ? 1 : -1;
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
    if (a[*it] != b[*it])
      return a[*it] < b[*it] ? 1 : -1;
  return 0;
}

// --- Polynomial -------------------------------------------------------------

Polynomial Polynomial::constant(VarList vars, const Rational &c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(p.nvars()), c);
  return p;
}

Polynomial Polynomial::variable(VarList vars, std::size_t index) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial::variable(p.nvars(), index), 1);
  return p;
}

Polynomial Polynomial::term(VarList vars, Monomial m, const Rational &c) {
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto &t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (m.nvars() != vars_.size())
    throw Error(ErrorCode::VariableMismatch, "monomial arity does not match the variable list");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Monomial Polynomial::leading_monomial(const MonomialOrder &order) const {
  if (terms_.empty())
    throw Error(ErrorCode::InvalidArgument, "leading monomial of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0)
      best = it;
  return best->first;
}

Rational Polynomial::leading_coefficient(const MonomialOrder &order) const {
  return terms_.at(leading_monomial(order));
}

void Polynomial::check_compatible(const Polynomial &other) const {
  if (vars_ != other.vars_)
    throw Error(ErrorCode::VariableMismatch, "polynomials over different variable lists");
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  check_compatible(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  check_compatible(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational &c) const {
  Polynomial r(vars_);
  if (sgn(c) == 0)
    return r;
  for (const auto &[m, a] : terms_)
    r.terms_.emplace(m, a * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial &mono, const Rational &c) const {
  Polynomial r(vars_);
  if (sgn(c) == 0)
    return r;
  for (const auto &[m, a] : terms_)
    r.terms_.emplace(m * mono, a * c);
  return r;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_compatible(b);
  Polynomial r(a.vars_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      r.add_term(ma * mb, ca * cb);
  return r;
}

bool Polynomial::operator==(const Polynomial &other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

std::string monomial_to_string(const Monomial &m, const VarList &vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += vars[i];
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  auto order = MonomialOrder::grevlex(nvars());
  std::vector<const TermMap::value_type *> sorted;
  for (const auto &t : terms_)
    sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto *a, const auto *b) { return order.compare(a->first, b->first) > 0; });
  std::string out;
  for (const auto *t : sorted) {
    const auto &[m, c] = *t;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1)
        out += mag.get_str() + "*";
      out += monomial_to_string(m, vars_);
    }
  }
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

// expr   := [+-] term { [+-] term }
// term   := power { '*' power | '/' integer }
// power  := atom [ '^' integer ]
// atom   := integer | variable | '(' expr ')'
class PolyParser {
public:
  PolyParser(std::string_view text, const VarList &vars) : vars_(vars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        src_ += c;
  }

  Polynomial parse() {
    if (src_.empty())
      fail("empty expression");
    Polynomial p = expr();
    if (pos_ < src_.size())
      fail(std::string("unexpected character '") + src_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return src_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    Polynomial result(vars_);
    bool negative = accept('-');
    if (!negative)
      accept('+');
    for (;;) {
      Polynomial t = term();
      if (negative)
        result -= t;
      else
        result += t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return result;
    }
  }

  Polynomial term() {
    Polynomial t = factor();
    for (;;) {
      if (accept('*')) {
        t = t * factor();
      } else if (accept('/')) {
        std::string den = take_digits();
        if (den.empty())
          fail("expected an integer divisor");
        Rational d = parse_rational(den);
        if (d == 0)
          fail("division by zero");
        t = t.scaled(1 / d);
      } else {
        return t;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!accept('^'))
      return base;
    std::string digits = take_digits();
    if (digits.empty() || digits.size() > 6)
      fail("bad exponent");
    auto e = static_cast<std::uint32_t>(std::stoul(digits));
    if (base.size() == 1) {
      // single term: raise directly, no repeated multiplication
      const auto &[m, c] = *base.terms().begin();
      Monomial me(vars_.size());
      for (std::size_t i = 0; i < vars_.size(); ++i)
        me[i] = m[i] * e;
      Rational ce = 1;
      for (std::uint32_t k = 0; k < e; ++k)
        ce *= c;
      return Polynomial::term(vars_, me, ce);
    }
    Polynomial r = Polynomial::constant(vars_, 1);
    for (std::uint32_t k = 0; k < e; ++k)
      r = r * base;
    return r;
  }

  Polynomial atom() {
    if (pos_ >= src_.size())
      fail("unexpected end of expression");
    char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch)))
      return Polynomial::constant(vars_, parse_rational(take_digits()));
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorCode::Parse, "unknown variable '" + name + "'");
      return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (accept('(')) {
      Polynomial inner = expr();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  const VarList &vars_;
  std::string src_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarList &vars) { return PolyParser(text, vars).parse(); }

Polynomial partial_derivative(const Polynomial &p, std::size_t var) {
  Polynomial r(p.vars());
  for (const auto &[m, c] : p.terms()) {
    if (m[var] == 0)
      continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * m[var]);
  }
  return r;
}

Polynomial power(const Polynomial &p, unsigned k) {
  Polynomial r = Polynomial::constant(p.vars(), 1);
  for (unsigned i = 0; i < k; ++i)
    r = r * p;
  return r;
}

} // namespace artin
