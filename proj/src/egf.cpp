#include "symtutte/egf.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/finite_field.hpp"
#include "symtutte/symmetric.hpp"

namespace symtutte {

TruncatedSeries::TruncatedSeries(unsigned order) : terms_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Poly> terms) : terms_(std::move(terms)) {
  terms_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
  TruncatedSeries s(order);
  s.terms_[0] = Poly(1);
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw InvalidParameter("series orders differ: " + std::to_string(a.order()) + " and " +
                           std::to_string(b.order()));
  return TruncatedSeries::from(a.order(), [&](unsigned n) {
    Poly u;
    for (unsigned i = 0; i <= n; ++i)
      if (!a[i].is_zero() && !b[n - i].is_zero()) u += Poly(binomial(n, i)) * a[i] * b[n - i];
    return u;
  });
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (k) {
    if (k & 1) result = series_mul(result, base);
    k >>= 1;
    if (k) base = series_mul(base, base);
  }
  return result;
}

Identity identity_from_name(const std::string& name) {
  if (name == "A") return Identity::A;
  if (name == "B") return Identity::B;
  if (name == "D") return Identity::D;
  if (name == "In" || name == "I") return Identity::In;
  if (name == "Gmpn") return Identity::Gmpn;
  if (name == "Gmmn") return Identity::Gmmn;
  throw InvalidParameter("unknown identity '" + name + "'");
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::A: return "A";
    case Identity::B: return "B";
    case Identity::D: return "D";
    case Identity::In: return "In";
    case Identity::Gmpn: return "Gmpn";
    case Identity::Gmmn: return "Gmmn";
  }
  return "?";
}

RingSpec EgfParams::ring() const {
  return backend == Backend::PrimeField ? RingSpec::prime_field(m, q) : RingSpec::paper_literal(m, q);
}

namespace {

unsigned long exact_exponent(std::uint64_t num, unsigned den, const std::string& what) {
  if (num % den) throw InvalidParameter(what + " is not an integer");
  return num / den;
}

TruncatedSeries t_power_series(unsigned order, const std::function<Integer(unsigned)>& coeff,
                               const std::function<unsigned long(unsigned)>& exponent) {
  return TruncatedSeries::from(order, [&](unsigned n) { return Poly::monomial(coeff(n), exponent(n)); });
}

// sum_{a+b=n} binom(n; a, b) t^{e(a, b)}
TruncatedSeries two_part_series(unsigned order, const std::function<unsigned long(unsigned, unsigned)>& e) {
  return TruncatedSeries::from(order, [&](unsigned n) {
    Poly u;
    for (unsigned a = 0; a <= n; ++a) u += Poly::monomial(binomial(n, a), e(a, n - a));
    return u;
  });
}

unsigned long choose2(unsigned n) { return static_cast<unsigned long>(n) * (n ? n - 1 : 0) / 2; }

void require_m1(const EgfParams& p, Identity id) {
  if (p.m != 1) throw InvalidParameter("identity " + identity_name(id) + " is over Z (m = 1)");
}

unsigned long half_odd(unsigned q, unsigned sub, Identity id) {
  if (q % 2 == 0 || q < sub)
    throw InvalidParameter("identity " + identity_name(id) + " needs an odd q >= " + std::to_string(sub));
  return (q - sub) / 2;
}

FamilyInstance family_for(Identity id, const EgfParams& p, unsigned n) {
  switch (id) {
    case Identity::A: return family_a(n);
    case Identity::B: return family_b(n);
    case Identity::D: return family_d(n);
    case Identity::In: return family_i(n);
    case Identity::Gmpn: return family_g(p.m, p.p, n);
    case Identity::Gmmn: return family_g(p.m, p.m, n);
  }
  throw InvalidParameter("unknown identity");
}

void validate_params(Identity id, const EgfParams& p) {
  switch (id) {
    case Identity::A:
      require_m1(p, id);
      break;
    case Identity::B:
    case Identity::D:
      require_m1(p, id);
      half_odd(p.q, 1, id);
      break;
    case Identity::In:
      require_m1(p, id);
      half_odd(p.q, 3, id);
      break;
    case Identity::Gmpn:
      if (p.p == 0 || p.m % p.p || p.p == p.m)
        throw InvalidParameter("identity Gmpn needs p a proper divisor of m");
      break;
    case Identity::Gmmn:
      if (p.m < 2) throw InvalidParameter("identity Gmmn needs m >= 2");
      break;
  }
}

}  // namespace

TruncatedSeries build_named_rhs(Identity id, const EgfParams& params, unsigned order) {
  validate_params(id, params);
  const auto one = [](unsigned) { return Integer(1); };
  const auto pow2 = [](unsigned n) { return ipow(Integer(2), n); };
  const unsigned q = params.q;
  switch (id) {
    case Identity::A:
      return series_pow(t_power_series(order, one, choose2), q);
    case Identity::B:
    case Identity::D: {
      const auto first = id == Identity::B
                             ? t_power_series(order, one, [](unsigned n) { return static_cast<unsigned long>(n) * n; })
                             : t_power_series(order, one, [](unsigned n) { return static_cast<unsigned long>(n) * (n ? n - 1 : 0); });
      return series_mul(first, series_pow(t_power_series(order, pow2, choose2), half_odd(q, 1, id)));
    }
    case Identity::In: {
      const auto edge = t_power_series(order, one, choose2);
      const auto zero_one = two_part_series(order, [](unsigned a, unsigned b) {
        return static_cast<unsigned long>(a) + b + static_cast<unsigned long>(a) * b;
      });
      const auto pair = two_part_series(order, [](unsigned a, unsigned b) { return static_cast<unsigned long>(a) * b; });
      return series_mul(series_mul(edge, zero_one), series_pow(pair, half_odd(q, 3, id)));
    }
    case Identity::Gmpn:
    case Identity::Gmmn: {
      const unsigned m = params.m;
      const std::uint64_t size = params.ring().ring_size();
      const auto classes = exact_exponent(size - 1, m, "(|ring| - 1) / m");
      const bool coords = id == Identity::Gmpn;
      const auto first = t_power_series(order, one, [m, coords](unsigned n) {
        return (coords ? n : 0) + m * choose2(n);
      });
      const auto nonzero = t_power_series(order, [m](unsigned n) { return ipow(Integer(m), n); }, choose2);
      return series_mul(first, series_pow(nonzero, classes));
    }
  }
  throw InvalidParameter("unknown identity");
}

TruncatedSeries series_from_partition(const std::vector<RepresentativeEquation>& reps, SymmetryKind kind,
                                      const RingSpec& spec, unsigned order) {
  const FiniteRing ring(spec);
  const bool colored = kind == SymmetryKind::CSH;
  std::vector<SolutionSet> sols;
  for (const auto& e : reps)
    if (e.arity() <= order) sols.push_back(solve_representative(e, ring, colored));
  const auto part = build_indice_partition(sols);

  std::vector<Elem> keys;
  if (colored) {
    keys = OrbitClasses(ring).keys();
  } else {
    keys.resize(ring.size());
    std::iota(keys.begin(), keys.end(), Elem{0});
  }
  // Weight of a coordinate taking a value in class k: the class size.
  const unsigned m = spec.m;
  auto weight = [&](Elem k) { return colored && k != 0 ? m : 1u; };

  std::set<Elem> uncovered(keys.begin(), keys.end());
  TruncatedSeries result = TruncatedSeries::one(order);
  for (const auto& block : part.blocks) {
    std::vector<SolutionSet> block_sols;
    std::set<Elem> block_support;
    // Restrict every solution set to this block's orbits.
    std::map<std::size_t, SolutionSet> per_set;
    for (const auto& mem : block) {
      const auto& s = sols[mem.set];
      auto [it, fresh] = per_set.try_emplace(mem.set, s);
      if (fresh) {
        it->second.vectors.clear();
        it->second.orbit_sizes.clear();
        it->second.classes.clear();
      }
      it->second.vectors.push_back(s.vectors[mem.vector]);
      it->second.orbit_sizes.push_back(s.orbit_sizes[mem.vector]);
      const Tuple& sup = colored ? s.classes[mem.vector] : s.vectors[mem.vector];
      if (colored) it->second.classes.push_back(sup);
      block_support.insert(sup.begin(), sup.end());
    }
    for (auto& [k, s] : per_set) block_sols.push_back(std::move(s));
    for (auto k : block_support) uncovered.erase(k);
    const std::vector<Elem> block_keys(block_support.begin(), block_support.end());
    result = series_mul(result, TruncatedSeries::from(order, [&](unsigned n) {
      Poly u;
      for_each_composition(block_keys, n, [&](const CompositionIndex& a) {
        Integer c = 1;
        std::vector<unsigned> parts;
        for (const auto& [k, v] : a.a) {
          parts.push_back(v);
          c *= ipow(Integer(weight(k)), v);
        }
        c *= multinomial(parts);
        const Integer h = colored ? hyperplane_count_csh(a, block_sols) : hyperplane_count_sh(a, block_sols);
        u += Poly::monomial(c, static_cast<unsigned>(h.get_ui()));
      });
      return u;
    }));
  }
  for (auto k : uncovered) {
    const Integer w = weight(k);
    result = series_mul(result, TruncatedSeries::from(order, [&](unsigned n) { return Poly(ipow(w, n)); }));
  }
  return result;
}

Poly egf_lhs_term(Identity id, const EgfParams& params, unsigned n, LhsSource source) {
  validate_params(id, params);
  const RingSpec spec = params.ring();
  const auto fam = family_for(id, params, n);
  const Arrangement& a = fam.arrangement;
  const unsigned r = rank(a);
  const Integer size(static_cast<unsigned long>(spec.ring_size()));
  switch (source) {
    case LhsSource::Definition:
      return coboundary(a).eval_first(size) * Poly(ipow(size, n - r));
    case LhsSource::PointCount:
      return coboundary_at_prime(a, spec) * Poly(ipow(size, n - r));
    case LhsSource::ClosedForm:
      return fam.kind == SymmetryKind::SH ? point_sum_sh(fam.reps, n, spec) : point_sum_csh(fam.reps, n, spec);
  }
  throw InvalidParameter("unknown source");
}

bool EgfReport::all_equal() const {
  for (const auto& e : entries)
    if (!e.equal) return false;
  return true;
}

std::string EgfReport::to_string() const {
  std::ostringstream os;
  os << "identity " << identity_name(identity) << " over " << params.ring().describe() << "\n";
  for (const auto& e : entries)
    os << "n=" << e.n << " " << (e.equal ? "ok" : "MISMATCH") << " lhs=" << e.lhs.to_string("t")
       << " rhs=" << e.rhs.to_string("t") << "\n";
  return os.str();
}

EgfReport egf_check(Identity id, const EgfParams& params, unsigned order, LhsSource source) {
  const auto rhs = build_named_rhs(id, params, order);
  EgfReport report{id, params, source, {}};
  for (unsigned n = 0; n <= order; ++n) {
    Poly lhs = egf_lhs_term(id, params, n, source);
    const bool eq = lhs == rhs[n];
    report.entries.push_back({n, std::move(lhs), rhs[n], eq});
  }
  return report;
}

}  // namespace symtutte
