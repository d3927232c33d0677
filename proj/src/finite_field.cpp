#include "symtutte/finite_field.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "symtutte/errors.hpp"

namespace symtutte {

namespace {

constexpr std::uint64_t kMaxPoints = 1ull << 32;

std::vector<std::vector<CycElem>> augmented_matrix(const Arrangement& a) {
  std::vector<std::vector<CycElem>> rows;
  for (const auto& h : a.hyperplanes()) {
    auto row = h.coeffs;
    row.push_back(h.rhs);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Laplace expansion along the first row; sizes here stay small.
CycElem determinant(const std::vector<std::vector<CycElem>>& mat, unsigned m) {
  const std::size_t k = mat.size();
  if (k == 0) return CycElem::integer(m, 1);
  if (k == 1) return mat[0][0];
  CycElem det(m);
  for (std::size_t c = 0; c < k; ++c) {
    if (mat[0][c].is_zero()) continue;
    std::vector<std::vector<CycElem>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<CycElem> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(mat[r][cc]);
      sub.push_back(std::move(row));
    }
    const CycElem term = mat[0][c] * determinant(sub, m);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Hadamard bound on |sigma(minor)| for every k x k minor and every complex
// embedding sigma, using |sigma(x)| <= sum of |coordinates of x|.
Integer minor_bound(const Arrangement& a, unsigned k) {
  std::vector<Integer> row_sq;
  for (const auto& row : augmented_matrix(a)) {
    Integer sq = 0;
    for (const auto& x : row) {
      Integer s = 0;
      for (const auto& c : x.coords()) s += abs(c);
      sq += s * s;
    }
    row_sq.push_back(sq);
  }
  std::sort(row_sq.begin(), row_sq.end(), std::greater<>());
  Integer prod = 1;
  for (unsigned i = 0; i < k && i < row_sq.size(); ++i) prod *= row_sq[i];
  Integer root = sqrt(prod);
  if (root * root < prod) ++root;
  return root;
}

bool bound_check(const Arrangement& a, const RingSpec& spec) {
  const unsigned k = static_cast<unsigned>(std::min<std::size_t>(a.size(), a.dim() + 1));
  Integer b = minor_bound(a, k);
  // A nonzero element of Z[w] evaluated in F_q can only vanish when q divides
  // its norm, which is at most b^phi(m) in absolute value.
  if (spec.backend == Backend::PrimeField) b = ipow(b, euler_phi(spec.m));
  return Integer(spec.q) > b;
}

}  // namespace

std::vector<CycElem> augmented_minors(const Arrangement& a) {
  const auto mat = augmented_matrix(a);
  const unsigned m = a.root_order();
  const std::size_t cols = a.dim() + 1;
  std::vector<CycElem> out;
  for (std::size_t k = 1; k <= std::min(mat.size(), cols); ++k) {
    for_each_combination(mat.size(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_combination(cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<CycElem>> sub;
        for (auto r : rs) {
          std::vector<CycElem> row;
          for (auto c : cs) row.push_back(mat[r][c]);
          sub.push_back(std::move(row));
        }
        out.push_back(determinant(sub, m));
      });
    });
  }
  return out;
}

bool check_correct_reduction(const Arrangement& a, const RingSpec& spec, const MinorPolicy& policy) {
  if (spec.m != a.root_order())
    throw IncompatibleRing("ring " + spec.describe() + " does not match root order " +
                           std::to_string(a.root_order()));
  if (a.dim() > policy.max_dim || a.size() > policy.max_hyperplanes) return bound_check(a, spec);
  const FiniteRing ring(spec);
  for (const auto& minor : augmented_minors(a)) {
    if (to_number_field(minor).is_zero()) continue;
    if (ring.reduce(minor) == 0) return false;
  }
  return true;
}

ReducedArrangement::ReducedArrangement(const Arrangement& a, const RingSpec& spec)
    : ring_(spec), n_(a.dim()) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Elem> row;
    for (const auto& c : a[i].coeffs) row.push_back(ring_.reduce(c));
    if (std::all_of(row.begin(), row.end(), [](Elem e) { return e == 0; }))
      throw InvalidReduction("hyperplane " + std::to_string(i + 1) + " vanishes over " + spec.describe());
    coeffs_.push_back(std::move(row));
    rhs_.push_back(ring_.reduce(a[i].rhs));
  }
}

bool ReducedArrangement::contains(std::size_t i, std::span<const Elem> point) const {
  Elem acc = 0;
  const auto& c = coeffs_[i];
  for (unsigned k = 0; k < n_; ++k)
    if (c[k] && point[k]) acc = ring_.add(acc, ring_.mul(c[k], point[k]));
  return acc == rhs_[i];
}

unsigned ReducedArrangement::membership_count(std::span<const Elem> point) const {
  unsigned h = 0;
  for (std::size_t i = 0; i < rhs_.size(); ++i) h += contains(i, point);
  return h;
}

Integer HHistogram::total() const {
  Integer s = 0;
  for (auto c : counts) s += Integer(static_cast<unsigned long>(c));
  return s;
}

Poly HHistogram::as_polynomial() const {
  std::vector<Integer> c;
  for (auto v : counts) c.emplace_back(static_cast<unsigned long>(v));
  return Poly(std::move(c));
}

HHistogram point_count_histogram(const ReducedArrangement& r, unsigned threads) {
  const std::uint64_t size = r.ring().size();
  const unsigned n = r.dim();
  std::uint64_t points = 1;
  for (unsigned i = 0; i < n; ++i) {
    points *= size;
    if (points > kMaxPoints)
      throw InvalidParameter("point domain over " + r.spec().describe() + " is too large");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, points / 4096)));

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(r.size() + 1, 0));
  auto work = [&](unsigned w) {
    const std::uint64_t lo = points * w / threads;
    const std::uint64_t hi = points * (w + 1) / threads;
    std::vector<FiniteRing::Elem> p(n);
    std::uint64_t v = lo;
    for (unsigned k = 0; k < n; ++k) {
      p[k] = static_cast<FiniteRing::Elem>(v % size);
      v /= size;
    }
    auto& hist = partial[w];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      ++hist[r.membership_count(p)];
      for (unsigned k = 0; k < n; ++k) {
        if (++p[k] < size) break;
        p[k] = 0;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  HHistogram out{std::vector<std::uint64_t>(r.size() + 1, 0)};
  for (const auto& ph : partial)
    for (std::size_t h = 0; h < ph.size(); ++h) out.counts[h] += ph[h];
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

bool check_flat_sizes(const Arrangement& a, const ReducedArrangement& r, std::size_t max_hyperplanes,
                      unsigned threads) {
  const std::size_t k = a.size();
  if (k > max_hyperplanes) return false;
  const std::uint64_t size = r.ring().size();
  const unsigned n = r.dim();
  std::uint64_t points = 1;
  for (unsigned i = 0; i < n; ++i) {
    points *= size;
    if (points > kMaxPoints)
      throw InvalidParameter("point domain over " + r.spec().describe() + " is too large");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, points / 4096)));
  const std::size_t masks = std::size_t{1} << k;

  // on_all[B] = number of points whose membership mask contains B.
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(masks, 0));
  auto work = [&](unsigned w) {
    const std::uint64_t lo = points * w / threads;
    const std::uint64_t hi = points * (w + 1) / threads;
    std::vector<FiniteRing::Elem> p(n);
    std::uint64_t v = lo;
    for (unsigned i = 0; i < n; ++i) {
      p[i] = static_cast<FiniteRing::Elem>(v % size);
      v /= size;
    }
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::size_t mask = 0;
      for (std::size_t h = 0; h < k; ++h)
        if (r.contains(h, p)) mask |= std::size_t{1} << h;
      ++partial[w][mask];
      for (unsigned i = 0; i < n; ++i) {
        if (++p[i] < size) break;
        p[i] = 0;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  std::vector<std::uint64_t> on_all(masks, 0);
  for (const auto& ph : partial)
    for (std::size_t b = 0; b < masks; ++b) on_all[b] += ph[b];
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t b = 0; b < masks; ++b)
      if (!(b >> h & 1)) on_all[b] += on_all[b | std::size_t{1} << h];

  for (std::size_t b = 0; b < masks; ++b) {
    std::vector<std::size_t> sub;
    for (std::size_t h = 0; h < k; ++h)
      if (b >> h & 1) sub.push_back(h);
    const Integer expected =
        is_central(a, sub) ? ipow(Integer(static_cast<unsigned long>(size)), n - rank(a, sub)) : Integer(0);
    const Integer got(static_cast<unsigned long>(on_all[b]));
    if (got != expected) {
      std::string names = "{";
      for (std::size_t i = 0; i < sub.size(); ++i) names += (i ? ", " : "") + std::to_string(sub[i] + 1);
      throw FlatSizeViolation(r.spec().describe(), names + "}", got.get_str(), expected.get_str());
    }
  }
  return true;
}

Poly coboundary_at_prime(const Arrangement& a, const RingSpec& spec, unsigned threads,
                         const MinorPolicy& policy) {
  if (!check_correct_reduction(a, spec, policy))
    throw InvalidReduction("arrangement does not reduce correctly over " + spec.describe());
  const ReducedArrangement reduced(a, spec);
  if (spec.backend == Backend::PaperLiteral && l_of(spec.m) > 1) check_flat_sizes(a, reduced, 12, threads);
  const HHistogram hist = point_count_histogram(reduced, threads);
  const Integer divisor = ipow(Integer(static_cast<unsigned long>(spec.ring_size())), a.dim() - rank(a));
  std::vector<Integer> c;
  for (std::size_t h = 0; h < hist.counts.size(); ++h) {
    const Integer count(static_cast<unsigned long>(hist.counts[h]));
    if (count % divisor != 0)
      throw TheoremViolation(spec.describe(), static_cast<unsigned>(h), count.get_str(), divisor.get_str());
    c.push_back(count / divisor);
  }
  return Poly(std::move(c));
}

Poly expected_at_prime(const Arrangement& a, const RingSpec& spec) {
  return coboundary(a).eval_first(Integer(static_cast<unsigned long>(spec.ring_size())));
}

BivarPoly interpolate_from_values(const std::vector<Integer>& nodes, const std::vector<Poly>& values,
                                  unsigned degree_bound) {
  if (nodes.size() != values.size()) throw InvalidParameter("node and value counts differ");
  std::vector<Integer> distinct = nodes;
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
    throw InvalidParameter("interpolation nodes must be distinct");
  if (nodes.size() < degree_bound + 1u)
    throw InsufficientPoints("need " + std::to_string(degree_bound + 1) + " evaluation points, got " +
                             std::to_string(nodes.size()));
  const std::size_t k = nodes.size();
  int t_deg = -1;
  for (const auto& v : values) t_deg = std::max(t_deg, v.degree());

  // Lagrange basis polynomials in X with rational coefficients.
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> b{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rational> nb(b.size() + 1, Rational(0));
      for (std::size_t e = 0; e < b.size(); ++e) {
        nb[e + 1] += b[e];
        nb[e] -= b[e] * Rational(nodes[j]);
      }
      b = std::move(nb);
      denom *= Rational(nodes[i] - nodes[j]);
    }
    for (auto& x : b) x /= denom;
    basis.push_back(std::move(b));
  }

  BivarPoly out("q", "t");
  for (int te = 0; te <= t_deg; ++te) {
    std::vector<Rational> acc(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      const Rational y(values[i].coeff(static_cast<unsigned>(te)));
      if (y == 0) continue;
      for (std::size_t e = 0; e < k; ++e) acc[e] += y * basis[i][e];
    }
    for (std::size_t e = 0; e < k; ++e) {
      acc[e].canonicalize();
      if (acc[e] == 0) continue;
      if (acc[e].get_den() != 1)
        throw InconsistencyError("interpolated coefficient of q^" + std::to_string(e) + " t^" +
                                 std::to_string(te) + " is not an integer");
      if (e > degree_bound)
        throw InconsistencyError("interpolated polynomial exceeds degree " + std::to_string(degree_bound));
      out.add_term(static_cast<unsigned>(e), static_cast<unsigned>(te), acc[e].get_num());
    }
  }
  return out;
}

BivarPoly interpolate_coboundary_values(const std::vector<Integer>& nodes, const std::vector<Poly>& values,
                                        unsigned full_rank) {
  if (full_rank == 0) return interpolate_from_values(nodes, values, 0);
  // Only the empty subset has rank 0, so the q^r coefficient is exactly 1 and
  // the remainder has degree at most r - 1.
  std::vector<Poly> rest;
  for (std::size_t i = 0; i < nodes.size(); ++i) rest.push_back(values[i] - Poly(ipow(nodes[i], full_rank)));
  BivarPoly out = interpolate_from_values(nodes, rest, full_rank - 1);
  out.add_term(full_rank, 0, 1);
  return out;
}

BivarPoly interpolate_coboundary(const Arrangement& a, const std::vector<RingSpec>& specs, unsigned threads) {
  std::vector<Integer> nodes;
  std::vector<Poly> values;
  for (const auto& s : specs) {
    nodes.emplace_back(static_cast<unsigned long>(s.ring_size()));
    values.push_back(coboundary_at_prime(a, s, threads));
  }
  return interpolate_coboundary_values(nodes, values, rank(a)).scale_first(l_of(a.root_order()));
}

std::vector<RingSpec> select_valid_specs(const Arrangement& a, Backend backend, std::size_t count,
                                         unsigned from, const MinorPolicy& policy) {
  std::vector<RingSpec> out;
  const unsigned m = a.root_order();
  for (unsigned q = std::max(from, 2u); out.size() < count; ++q) {
    if (!is_prime(q)) continue;
    if (q > 100000) throw InsufficientPoints("no valid primes found below 100000");
    RingSpec s;
    if (backend == Backend::PrimeField) {
      if ((q - 1) % m) continue;
      s = RingSpec::prime_field(m, q);
    } else {
      s = RingSpec::paper_literal(m, q);
    }
    if (check_correct_reduction(a, s, policy)) out.push_back(s);
  }
  return out;
}

}  // namespace symtutte
