#include "symtutte/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "symtutte/errors.hpp"

namespace symtutte {

namespace {

void require_order(unsigned m) {
  if (m == 0) throw InvalidOrder("root order must be positive");
}

void require_same(unsigned a, unsigned b) {
  if (a != b)
    throw IncompatibleRing("mismatched root orders " + std::to_string(a) + " and " +
                           std::to_string(b));
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic integer polynomial.
QPoly rem_monic(QPoly p, const std::vector<Integer>& mod) {
  const std::size_t d = mod.size() - 1;
  trim(p);
  while (p.size() > d) {
    const Rational lead = p.back();
    const std::size_t shift = p.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) p[shift + i] -= lead * mod[i];
    trim(p);
  }
  return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder in Q[x]; b nonzero.
std::pair<QPoly, QPoly> qdivmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const Rational coef = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

NFElem make_nf(unsigned m, QPoly p) {
  const auto& phi = cyclotomic_polynomial(m);
  p = rem_monic(std::move(p), phi);
  p.resize(phi.size() - 1);
  return NFElem(m, std::move(p));
}

QPoly as_qpoly(const std::vector<Rational>& c) {
  QPoly p = c;
  trim(p);
  return p;
}

}  // namespace

unsigned l_of(unsigned m) {
  require_order(m);
  return m % 2 ? m : m / 2;
}

unsigned euler_phi(unsigned m) {
  require_order(m);
  unsigned result = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

CycElem::CycElem(unsigned m) : m_(m), coords_(l_of(m)) {}

CycElem::CycElem(unsigned m, std::vector<Integer> coords) : m_(m), coords_(std::move(coords)) {
  if (coords_.size() != l_of(m))
    throw InvalidParameter("Z[w_" + std::to_string(m) + "] elements need " +
                           std::to_string(l_of(m)) + " coordinates, got " +
                           std::to_string(coords_.size()));
}

CycElem CycElem::integer(unsigned m, const Integer& value) {
  CycElem r(m);
  r.coords_[0] = value;
  return r;
}

CycElem CycElem::root_power(unsigned m, long k) {
  require_order(m);
  const long mm = static_cast<long>(m);
  long e = ((k % mm) + mm) % mm;
  CycElem r(m);
  const long l = static_cast<long>(l_of(m));
  if (e >= l) {
    // only reachable for even m: w^{l + i} = -w^i
    r.coords_[static_cast<std::size_t>(e - l)] = -1;
  } else {
    r.coords_[static_cast<std::size_t>(e)] = 1;
  }
  return r;
}

bool CycElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycElem& CycElem::operator+=(const CycElem& rhs) {
  require_same(m_, rhs.m_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& rhs) {
  require_same(m_, rhs.m_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& rhs) {
  require_same(m_, rhs.m_);
  const std::size_t l = coords_.size();
  const bool odd = m_ % 2 == 1;
  std::vector<Integer> out(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (rhs.coords_[j] == 0) continue;
      std::size_t e = i + j;
      if (e >= l) {
        e -= l;
        if (odd)
          out[e] += coords_[i] * rhs.coords_[j];
        else
          out[e] -= coords_[i] * rhs.coords_[j];
      } else {
        out[e] += coords_[i] * rhs.coords_[j];
      }
    }
  }
  coords_ = std::move(out);
  return *this;
}

CycElem cyc_add(const CycElem& a, const CycElem& b) { return a + b; }
CycElem cyc_mul(const CycElem& a, const CycElem& b) { return a * b; }

CycElem reduce_mod_q(const CycElem& a, unsigned long q) {
  if (q < 2) throw InvalidParameter("modulus must be at least 2");
  std::vector<Integer> c = a.coords();
  const Integer qq = q;
  for (auto& x : c) {
    x %= qq;
    if (x < 0) x += qq;
  }
  return CycElem(a.order(), std::move(c));
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  require_order(m);
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up so the
  // recursive lookups never re-enter the lock.
  for (unsigned k = 1; k <= m; ++k) {
    if (m % k || cache.count(k)) continue;
    QPoly num(k + 1);
    num[0] = -1;
    num[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d) continue;
      const auto& pd = cache.at(d);
      QPoly den(pd.begin(), pd.end());
      auto [q, r] = qdivmod(num, den);
      if (!r.empty()) throw InconsistencyError("cyclotomic recursion left a remainder");
      num = std::move(q);
    }
    std::vector<Integer> out;
    out.reserve(num.size());
    for (const auto& c : num) {
      if (c.get_den() != 1) throw InconsistencyError("non-integral cyclotomic coefficient");
      out.push_back(c.get_num());
    }
    cache.emplace(k, std::move(out));
  }
  return cache.at(m);
}

NFElem::NFElem(unsigned m) : m_(m), c_(euler_phi(m)) {}

NFElem::NFElem(unsigned m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (c_.size() != euler_phi(m)) *this = make_nf(m, std::move(c_));
}

NFElem NFElem::integer(unsigned m, const Integer& v) {
  NFElem r(m);
  r.c_[0] = v;
  return r;
}

bool NFElem::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NFElem& NFElem::operator+=(const NFElem& rhs) {
  require_same(m_, rhs.m_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& rhs) {
  require_same(m_, rhs.m_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& rhs) {
  require_same(m_, rhs.m_);
  if (c_.size() == 1) {
    c_[0] *= rhs.c_[0];
    return *this;
  }
  *this = make_nf(m_, qmul(as_qpoly(c_), as_qpoly(rhs.c_)));
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw InconsistencyError("inverse of zero in Q(w)");
  if (c_.size() == 1) return NFElem(m_, {1 / c_[0]});
  // Extended Euclid: s*a + t*phi = g with g a nonzero constant since Phi_m is
  // irreducible.
  const auto& phi = cyclotomic_polynomial(m_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = as_qpoly(c_);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw InconsistencyError("non-invertible element in Q(w)");
  const Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return make_nf(m_, std::move(s1));
}

bool operator<(const NFElem& a, const NFElem& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

NFElem to_number_field(const CycElem& a) {
  QPoly p(a.coords().begin(), a.coords().end());
  return make_nf(a.order(), std::move(p));
}

namespace {

template <class T>
std::string render_terms(const std::vector<T>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    T mag = c[i] < 0 ? T(-c[i]) : c[i];
    const bool neg = c[i] < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const CycElem& a) { return render_terms(a.coords()); }
std::string to_string(const NFElem& a) { return render_terms(a.coeffs()); }

}  // namespace symtutte
