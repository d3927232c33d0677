#include "symtutte/polynomial.hpp"

#include <algorithm>

#include "symtutte/errors.hpp"

namespace symtutte {

namespace {

const Integer kZero = 0;

std::string monomial_text(const std::string& var, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? var : var + "^" + std::to_string(e);
}

// Appends "c*mono" with sign handling; `first` tracks the leading term.
void append_term(std::string& out, const Integer& c, const std::string& mono) {
  const bool neg = c < 0;
  const Integer mag = neg ? Integer(-c) : c;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty())
    out += mag.get_str();
  else if (mag == 1)
    out += mono;
  else
    out += mag.get_str() + "*" + mono;
}

}  // namespace

Poly::Poly(const Integer& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Integer& c, unsigned exp) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(exp + 1, 0);
  p.c_[exp] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& Poly::coeff(unsigned exp) const { return exp < c_.size() ? c_[exp] : kZero; }

Integer Poly::eval(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose(const Poly& p) const {
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * p + Poly(c_[i]);
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::exact_div(const Integer& d) const {
  Poly r = *this;
  for (auto& c : r.c_) c = symtutte::exact_div(c, d);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) append_term(out, c_[i], monomial_text(var, static_cast<unsigned>(i)));
  return out.empty() ? "0" : out;
}

BivarPoly BivarPoly::constant(std::string v1, std::string v2, const Integer& c) {
  BivarPoly p(std::move(v1), std::move(v2));
  p.add_term(0, 0, c);
  return p;
}

BivarPoly BivarPoly::first(std::string v1, std::string v2) {
  BivarPoly p(std::move(v1), std::move(v2));
  p.add_term(1, 0, 1);
  return p;
}

BivarPoly BivarPoly::second(std::string v1, std::string v2) {
  BivarPoly p(std::move(v1), std::move(v2));
  p.add_term(0, 1, 1);
  return p;
}

BivarPoly BivarPoly::from_first(std::string v1, std::string v2, const Poly& poly) {
  BivarPoly p(std::move(v1), std::move(v2));
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i)
    p.add_term(static_cast<unsigned>(i), 0, poly.coeffs()[i]);
  return p;
}

BivarPoly BivarPoly::from_second(std::string v1, std::string v2, const Poly& poly) {
  BivarPoly p(std::move(v1), std::move(v2));
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i)
    p.add_term(0, static_cast<unsigned>(i), poly.coeffs()[i]);
  return p;
}

Integer BivarPoly::coeff(unsigned e1, unsigned e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivarPoly::add_term(unsigned e1, unsigned e2, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned BivarPoly::degree_first() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BivarPoly::degree_second() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  BivarPoly out(vars_[0], vars_[1]);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(vars_[0], vars_[1], 1);
  BivarPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Integer BivarPoly::eval(const Integer& v1, const Integer& v2) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c * ipow(v1, e.first) * ipow(v2, e.second);
  return acc;
}

Poly BivarPoly::eval_first(const Integer& v1) const {
  Poly acc;
  for (const auto& [e, c] : terms_) acc += Poly::monomial(c * ipow(v1, e.first), e.second);
  return acc;
}

Poly BivarPoly::eval_second(const Integer& v2) const {
  Poly acc;
  for (const auto& [e, c] : terms_) acc += Poly::monomial(c * ipow(v2, e.second), e.first);
  return acc;
}

BivarPoly BivarPoly::substitute(const BivarPoly& a, const BivarPoly& b) const {
  std::vector<BivarPoly> pa{constant(a.vars_[0], a.vars_[1], 1)};
  std::vector<BivarPoly> pb{constant(a.vars_[0], a.vars_[1], 1)};
  const BivarPoly bb = b.renamed(a.vars_[0], a.vars_[1]);
  BivarPoly out(a.vars_[0], a.vars_[1]);
  for (const auto& [e, c] : terms_) {
    while (pa.size() <= e.first) pa.push_back(pa.back() * a);
    while (pb.size() <= e.second) pb.push_back(pb.back() * bb);
    out += constant(a.vars_[0], a.vars_[1], c) * pa[e.first] * pb[e.second];
  }
  return out;
}

BivarPoly BivarPoly::divide_second_linear(const Integer& root) const {
  // Synthetic division in v2 with coefficients in Z[v1].
  const unsigned d = degree_second();
  std::vector<Poly> rows(d + 1);
  for (const auto& [e, c] : terms_) rows[e.second] += Poly::monomial(c, e.first);
  BivarPoly out(vars_[0], vars_[1]);
  if (is_zero()) return out;
  Poly carry;
  for (unsigned j = d; j >= 1; --j) {
    carry = rows[j] + carry * Poly(root);
    for (std::size_t i = 0; i < carry.coeffs().size(); ++i)
      out.add_term(static_cast<unsigned>(i), j - 1, carry.coeffs()[i]);
  }
  const Poly rem = rows[0] + carry * Poly(root);
  if (!rem.is_zero())
    throw InconsistencyError("division by (" + vars_[1] + " - " + root.get_str() +
                             ") leaves a remainder");
  return out;
}

BivarPoly BivarPoly::scale_first(unsigned k) const {
  BivarPoly out(vars_[0], vars_[1]);
  for (const auto& [e, c] : terms_) out.add_term(e.first * k, e.second, c);
  return out;
}

BivarPoly BivarPoly::unscale_first(unsigned k) const {
  BivarPoly out(vars_[0], vars_[1]);
  for (const auto& [e, c] : terms_) {
    if (e.first % k) throw InconsistencyError("exponent not divisible by " + std::to_string(k));
    out.add_term(e.first / k, e.second, c);
  }
  return out;
}

BivarPoly BivarPoly::renamed(std::string v1, std::string v2) const {
  BivarPoly out(std::move(v1), std::move(v2));
  out.terms_ = terms_;
  return out;
}

std::string BivarPoly::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e1, e2] = it->first;
    std::string mono = monomial_text(vars_[0], e1);
    const std::string m2 = monomial_text(vars_[1], e2);
    if (!m2.empty()) mono = mono.empty() ? m2 : mono + "*" + m2;
    append_term(out, it->second, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace symtutte
