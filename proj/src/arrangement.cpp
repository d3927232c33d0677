#include "symtutte/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "symtutte/errors.hpp"

namespace symtutte {

namespace {

std::vector<NFElem> augmented_row(const Hyperplane& h) {
  std::vector<NFElem> row;
  row.reserve(h.coeffs.size() + 1);
  for (const auto& c : h.coeffs) row.push_back(to_number_field(c));
  row.push_back(to_number_field(h.rhs));
  return row;
}

std::vector<std::size_t> all_indices(const Arrangement& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

}  // namespace

std::vector<NFElem> normalized_key(const Hyperplane& h) {
  auto row = augmented_row(h);
  const auto lead = std::find_if(row.begin(), row.end() - 1, [](const NFElem& e) { return !e.is_zero(); });
  if (lead == row.end() - 1) throw InvalidHyperplane("hyperplane has a zero coefficient vector");
  const NFElem inv = lead->inverse();
  for (auto& e : row) e *= inv;
  return row;
}

Arrangement::Arrangement(unsigned m, unsigned n, std::vector<Hyperplane> hyperplanes)
    : m_(m), n_(n), hyperplanes_(std::move(hyperplanes)) {
  if (m == 0) throw InvalidOrder("root order must be positive");
  std::set<std::vector<NFElem>> seen;
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.coeffs.size() != n)
      throw InvalidHyperplane("hyperplane " + std::to_string(i + 1) + " has " +
                              std::to_string(h.coeffs.size()) + " coefficients, expected " +
                              std::to_string(n));
    if (h.rhs.order() != m ||
        std::any_of(h.coeffs.begin(), h.coeffs.end(), [m](const CycElem& c) { return c.order() != m; }))
      throw IncompatibleRing("hyperplane " + std::to_string(i + 1) + " is not over Z[w_" +
                             std::to_string(m) + "]");
    if (!seen.insert(normalized_key(h)).second)
      throw DuplicateHyperplane("hyperplane " + std::to_string(i + 1) + " repeats an earlier one");
    rows_.push_back(augmented_row(h));
  }
}

EchelonBasis::EchelonBasis(unsigned m, unsigned coef_cols, bool augmented)
    : m_(m), coef_cols_(coef_cols), augmented_(augmented) {}

EchelonBasis::Outcome EchelonBasis::insert(std::span<const NFElem> row_in) {
  std::vector<NFElem> row(row_in.begin(), row_in.end());
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const NFElem factor = row[pivots_[b]];
    if (factor.is_zero()) continue;
    const auto& basis = rows_[b];
    for (std::size_t c = pivots_[b]; c < row.size(); ++c)
      if (!basis[c].is_zero()) row[c] -= factor * basis[c];
  }
  unsigned pivot = coef_cols_;
  for (unsigned c = 0; c < coef_cols_; ++c) {
    if (!row[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot == coef_cols_) {
    if (augmented_ && !row[coef_cols_].is_zero()) return Outcome::Inconsistent;
    return Outcome::Dependent;
  }
  const NFElem inv = row[pivot].inverse();
  for (std::size_t c = pivot; c < row.size(); ++c)
    if (!row[c].is_zero()) row[c] *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return Outcome::Independent;
}

void EchelonBasis::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

bool is_central(const Arrangement& a, std::span<const std::size_t> sub) {
  EchelonBasis basis(a.root_order(), a.dim(), true);
  for (auto i : sub)
    if (basis.insert(a.nf_rows().at(i)) == EchelonBasis::Outcome::Inconsistent) return false;
  return true;
}

unsigned rank(const Arrangement& a, std::span<const std::size_t> sub) {
  // Any coefficient-independent subset is consistent, so the largest central
  // rank of a subset is the rank of its coefficient matrix.
  EchelonBasis basis(a.root_order(), a.dim(), false);
  for (auto i : sub) {
    const auto& row = a.nf_rows().at(i);
    basis.insert(std::span<const NFElem>(row.data(), a.dim()));
  }
  return basis.rank();
}

unsigned rank(const Arrangement& a) {
  const auto idx = all_indices(a);
  return rank(a, idx);
}

unsigned rank_by_central_search(const Arrangement& a, std::span<const std::size_t> sub) {
  EchelonBasis basis(a.root_order(), a.dim(), true);
  unsigned best = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    best = std::max(best, basis.rank());
    for (std::size_t k = from; k < sub.size(); ++k) {
      if (basis.insert(a.nf_rows().at(sub[k])) != EchelonBasis::Outcome::Independent) continue;
      dfs(k + 1);
      basis.pop();
    }
  };
  dfs(0);
  return best;
}

CentralProfile central_profile(const Arrangement& a) {
  CentralProfile profile;
  profile.full_rank = rank(a);
  EchelonBasis basis(a.root_order(), a.dim(), true);
  const auto& rows = a.nf_rows();
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> counts;
  // Subsets of a central set are central, so an inconsistent extension prunes
  // the whole branch.
  std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t from, unsigned size) {
    ++counts[{basis.rank(), size}];
    for (std::size_t k = from; k < rows.size(); ++k) {
      switch (basis.insert(rows[k])) {
        case EchelonBasis::Outcome::Inconsistent:
          break;
        case EchelonBasis::Outcome::Dependent:
          dfs(k + 1, size + 1);
          break;
        case EchelonBasis::Outcome::Independent:
          dfs(k + 1, size + 1);
          basis.pop();
          break;
      }
    }
  };
  dfs(0, 0);
  for (const auto& [key, c] : counts) profile.counts[key] = Integer(static_cast<unsigned long>(c));
  return profile;
}

BivarPoly tutte(const CentralProfile& p) {
  const BivarPoly xm1 = BivarPoly::first("x", "y") - BivarPoly::constant("x", "y", 1);
  const BivarPoly ym1 = BivarPoly::second("x", "y") - BivarPoly::constant("x", "y", 1);
  BivarPoly out("x", "y");
  for (const auto& [key, count] : p.counts) {
    const auto [r, s] = key;
    out += BivarPoly::constant("x", "y", count) * xm1.pow(p.full_rank - r) * ym1.pow(s - r);
  }
  return out;
}

BivarPoly tutte(const Arrangement& a) { return tutte(central_profile(a)); }

BivarPoly coboundary(const CentralProfile& p) {
  const BivarPoly tm1 = BivarPoly::second("q", "t") - BivarPoly::constant("q", "t", 1);
  BivarPoly out("q", "t");
  for (const auto& [key, count] : p.counts) {
    const auto [r, s] = key;
    BivarPoly term("q", "t");
    term.add_term(p.full_rank - r, 0, count);
    out += term * tm1.pow(s);
  }
  return out;
}

BivarPoly coboundary(const Arrangement& a) { return coboundary(central_profile(a)); }

BivarPoly zeta_coboundary(const Arrangement& a) {
  return coboundary(a).scale_first(l_of(a.root_order()));
}

bool tutte_coboundary_check(const Arrangement& a) {
  const auto profile = central_profile(a);
  const BivarPoly t = tutte(profile);
  const BivarPoly cob = coboundary(profile);
  const BivarPoly x = BivarPoly::first("x", "y");
  const BivarPoly y = BivarPoly::second("x", "y");
  const BivarPoly one = BivarPoly::constant("x", "y", 1);
  BivarPoly sub = cob.substitute((x - one) * (y - one), y);
  for (unsigned i = 0; i < profile.full_rank; ++i) sub = sub.divide_second_linear(1);
  return sub == t;
}

Poly characteristic(const Arrangement& a) {
  const auto profile = central_profile(a);
  const Poly at_zero = coboundary(profile).eval_second(0);
  return at_zero * Poly::monomial(1, a.dim() - profile.full_rank);
}

Poly poincare(const Arrangement& a) {
  // q^r T(1 + 1/q, 0), expanded termwise; T(x, 0) has degree at most r(A).
  const auto profile = central_profile(a);
  const Poly in_x = tutte(profile).eval_second(0);
  const Poly one_plus_q = Poly(1) + Poly::var();
  Poly out;
  for (int i = 0; i <= in_x.degree(); ++i)
    out += one_plus_q.pow(i) * Poly::monomial(in_x.coeff(i), profile.full_rank - i);
  return out;
}

Integer region_count(const Arrangement& a) {
  for (const auto& row : a.nf_rows())
    for (const auto& e : row)
      if (!e.is_rational()) throw NotReal("region count needs real coefficients");
  Integer v = tutte(a).eval(2, 0);
  return v < 0 ? Integer(-v) : v;
}

}  // namespace symtutte
