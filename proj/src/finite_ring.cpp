#include "symtutte/finite_ring.hpp"

#include "symtutte/errors.hpp"

namespace symtutte {

namespace {

constexpr std::uint32_t kTableLimit = 512;
constexpr std::uint64_t kMaxRingSize = 1u << 24;

unsigned mult_order(unsigned x, unsigned q) {
  unsigned o = 1;
  std::uint64_t v = x % q;
  while (v != 1) {
    v = v * x % q;
    ++o;
    if (o > q) return 0;
  }
  return o;
}

void require_prime(unsigned q) {
  if (!is_prime(q)) throw InvalidParameter(std::to_string(q) + " is not prime");
}

}  // namespace

RingSpec RingSpec::paper_literal(unsigned m, unsigned q) {
  if (m == 0) throw InvalidOrder("root order must be positive");
  require_prime(q);
  RingSpec s;
  s.backend = Backend::PaperLiteral;
  s.m = m;
  s.q = q;
  s.zeta = 0;
  if (s.ring_size() > kMaxRingSize) throw InvalidParameter("ring " + s.describe() + " too large");
  return s;
}

RingSpec RingSpec::prime_field(unsigned m, unsigned q) {
  if (m == 0) throw InvalidOrder("root order must be positive");
  require_prime(q);
  if ((q - 1) % m)
    throw NoRootOfUnity("F_" + std::to_string(q) + " has no element of order " + std::to_string(m));
  for (unsigned z = 1; z < q; ++z)
    if (mult_order(z, q) == m) return prime_field(m, q, z);
  throw NoRootOfUnity("no element of order " + std::to_string(m) + " in F_" + std::to_string(q));
}

RingSpec RingSpec::prime_field(unsigned m, unsigned q, unsigned zeta) {
  if (m == 0) throw InvalidOrder("root order must be positive");
  require_prime(q);
  if ((q - 1) % m)
    throw NoRootOfUnity("F_" + std::to_string(q) + " has no element of order " + std::to_string(m));
  if (zeta == 0 || zeta >= q || mult_order(zeta, q) != m)
    throw NoRootOfUnity(std::to_string(zeta) + " does not have order " + std::to_string(m) +
                        " in F_" + std::to_string(q));
  RingSpec s;
  s.backend = Backend::PrimeField;
  s.m = m;
  s.q = q;
  s.zeta = zeta;
  return s;
}

std::uint64_t RingSpec::ring_size() const {
  if (backend == Backend::PrimeField) return q;
  std::uint64_t r = 1;
  for (unsigned i = 0; i < l_of(m); ++i) {
    r *= q;
    if (r > (1ull << 40)) return r;
  }
  return r;
}

std::string RingSpec::describe() const {
  if (backend == Backend::PrimeField)
    return "F_" + std::to_string(q) + " (w=" + std::to_string(zeta) + ", m=" + std::to_string(m) + ")";
  return "F_" + std::to_string(q) + "[w_" + std::to_string(m) + "]";
}

std::vector<CycElem> enumerate_ring(const RingSpec& spec) {
  FiniteRing ring(spec);
  std::vector<CycElem> out;
  out.reserve(ring.size());
  for (std::uint32_t i = 0; i < ring.size(); ++i) out.push_back(ring.lift(i));
  return out;
}

FiniteRing::FiniteRing(const RingSpec& spec) : spec_(spec), l_(l_of(spec.m)) {
  if (spec_.backend == Backend::PrimeField) {
    spec_ = RingSpec::prime_field(spec.m, spec.q, spec.zeta);
    l_ = 1;
  } else {
    spec_ = RingSpec::paper_literal(spec.m, spec.q);
  }
  size_ = static_cast<std::uint32_t>(spec_.ring_size());

  if (size_ <= kTableLimit) {
    add_table_.resize(std::size_t(size_) * size_);
    mul_table_.resize(std::size_t(size_) * size_);
    for (Elem a = 0; a < size_; ++a) {
      const auto ca = coords(a);
      for (Elem b = 0; b < size_; ++b) {
        const auto cb = coords(b);
        std::vector<std::uint32_t> s(ca.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = (ca[i] + cb[i]) % spec_.q;
        add_table_[std::size_t(a) * size_ + b] = encode(s);
        mul_table_[std::size_t(a) * size_ + b] = mul_slow(a, b);
      }
    }
  }
  for (unsigned k = 0; k < spec_.m; ++k) roots_.push_back(reduce(CycElem::root_power(spec_.m, k)));
}

std::vector<std::uint32_t> FiniteRing::coords(Elem a) const {
  std::vector<std::uint32_t> c(l_);
  for (unsigned i = 0; i < l_; ++i) {
    c[i] = a % spec_.q;
    a /= spec_.q;
  }
  return c;
}

FiniteRing::Elem FiniteRing::encode(const std::vector<std::uint32_t>& c) const {
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * spec_.q + c[i];
  return r;
}

FiniteRing::Elem FiniteRing::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[std::size_t(a) * size_ + b];
  auto ca = coords(a);
  const auto cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % spec_.q;
  return encode(ca);
}

FiniteRing::Elem FiniteRing::sub(Elem a, Elem b) const {
  auto ca = coords(a);
  const auto cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + spec_.q - cb[i]) % spec_.q;
  return encode(ca);
}

FiniteRing::Elem FiniteRing::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t(a) * size_ + b];
  return mul_slow(a, b);
}

FiniteRing::Elem FiniteRing::mul_slow(Elem a, Elem b) const {
  const std::uint64_t q = spec_.q;
  if (spec_.backend == Backend::PrimeField) return static_cast<Elem>(std::uint64_t(a) * b % q);
  const auto ca = coords(a);
  const auto cb = coords(b);
  const bool odd = spec_.m % 2 == 1;
  std::vector<std::uint64_t> acc(l_, 0);
  for (unsigned i = 0; i < l_; ++i) {
    for (unsigned j = 0; j < l_; ++j) {
      const std::uint64_t p = std::uint64_t(ca[i]) * cb[j] % q;
      unsigned e = i + j;
      if (e >= l_) {
        e -= l_;
        acc[e] = odd ? (acc[e] + p) % q : (acc[e] + q - p) % q;
      } else {
        acc[e] = (acc[e] + p) % q;
      }
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return encode(out);
}

FiniteRing::Elem FiniteRing::reduce(const CycElem& a) const {
  if (a.order() != spec_.m)
    throw IncompatibleRing("element of Z[w_" + std::to_string(a.order()) + "] reduced into " +
                           spec_.describe());
  const Integer q = spec_.q;
  if (spec_.backend == Backend::PrimeField) {
    Integer acc = 0;
    Integer power = 1;
    for (const auto& c : a.coords()) {
      acc += c * power;
      power = power * spec_.zeta % q;
    }
    acc %= q;
    if (acc < 0) acc += q;
    return static_cast<Elem>(acc.get_ui());
  }
  std::vector<std::uint32_t> c(l_);
  for (unsigned i = 0; i < l_; ++i) {
    Integer r = a[i] % q;
    if (r < 0) r += q;
    c[i] = static_cast<std::uint32_t>(r.get_ui());
  }
  return encode(c);
}

CycElem FiniteRing::lift(Elem a) const {
  if (spec_.backend == Backend::PrimeField) return CycElem::integer(spec_.m, a);
  const auto c = coords(a);
  std::vector<Integer> v(c.begin(), c.end());
  return CycElem(spec_.m, std::move(v));
}

std::string FiniteRing::element_string(Elem a) const {
  if (spec_.backend == Backend::PrimeField) return std::to_string(a);
  return "(" + to_string(lift(a)) + ")";
}

}  // namespace symtutte
