#include "symtutte/families.hpp"

#include "symtutte/errors.hpp"

namespace symtutte {

std::string to_string(SymmetryKind k) { return k == SymmetryKind::SH ? "sh" : "csh"; }

void validate(const RepresentativeEquation& e) {
  if (e.coeffs.empty()) throw InvalidHyperplane("representative equation has no variables");
  if (to_number_field(e.coeffs.front()).is_zero() || to_number_field(e.coeffs.back()).is_zero())
    throw InvalidHyperplane("representative equation must have nonzero first and last coefficients");
}

namespace {

CycElem num(unsigned m, long v) { return CycElem::integer(m, v); }

Hyperplane pair_form(unsigned m, unsigned n, unsigned i, unsigned j, const CycElem& cj, long rhs) {
  Hyperplane h{std::vector<CycElem>(n, CycElem(m)), num(m, rhs)};
  h.coeffs[i] = num(m, 1);
  h.coeffs[j] = cj;
  return h;
}

Hyperplane single_form(unsigned m, unsigned n, unsigned i, long rhs) {
  Hyperplane h{std::vector<CycElem>(n, CycElem(m)), num(m, rhs)};
  h.coeffs[i] = num(m, 1);
  return h;
}

RepresentativeEquation rep1(unsigned m, long rhs) { return {{num(m, 1)}, num(m, rhs)}; }
RepresentativeEquation rep2(unsigned m, const CycElem& c2, long rhs) {
  return {{num(m, 1), c2}, num(m, rhs)};
}

}  // namespace

FamilyInstance family_a(unsigned n) {
  std::vector<Hyperplane> hs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) hs.push_back(pair_form(1, n, i, j, num(1, -1), 0));
  std::vector<RepresentativeEquation> reps;
  if (n >= 2) reps.push_back(rep2(1, num(1, -1), 0));
  return {"A(" + std::to_string(n) + ")", Arrangement(1, n, std::move(hs)), SymmetryKind::SH, reps};
}

FamilyInstance family_b(unsigned n) {
  std::vector<Hyperplane> hs;
  for (unsigned i = 0; i < n; ++i) hs.push_back(single_form(1, n, i, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      hs.push_back(pair_form(1, n, i, j, num(1, -1), 0));
      hs.push_back(pair_form(1, n, i, j, num(1, 1), 0));
    }
  std::vector<RepresentativeEquation> reps;
  if (n >= 1) reps.push_back(rep1(1, 0));
  if (n >= 2) {
    reps.push_back(rep2(1, num(1, -1), 0));
    reps.push_back(rep2(1, num(1, 1), 0));
  }
  return {"B(" + std::to_string(n) + ")", Arrangement(1, n, std::move(hs)), SymmetryKind::SH, reps};
}

FamilyInstance family_d(unsigned n) {
  std::vector<Hyperplane> hs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      hs.push_back(pair_form(1, n, i, j, num(1, -1), 0));
      hs.push_back(pair_form(1, n, i, j, num(1, 1), 0));
    }
  std::vector<RepresentativeEquation> reps;
  if (n >= 2) {
    reps.push_back(rep2(1, num(1, -1), 0));
    reps.push_back(rep2(1, num(1, 1), 0));
  }
  return {"D(" + std::to_string(n) + ")", Arrangement(1, n, std::move(hs)), SymmetryKind::SH, reps};
}

FamilyInstance family_i(unsigned n) {
  std::vector<Hyperplane> hs;
  for (unsigned i = 0; i < n; ++i) hs.push_back(single_form(1, n, i, 0));
  for (unsigned i = 0; i < n; ++i) hs.push_back(single_form(1, n, i, 1));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) hs.push_back(pair_form(1, n, i, j, num(1, 1), 1));
  std::vector<RepresentativeEquation> reps;
  if (n >= 1) {
    reps.push_back(rep1(1, 0));
    reps.push_back(rep1(1, 1));
  }
  if (n >= 2) reps.push_back(rep2(1, num(1, 1), 1));
  return {"I(" + std::to_string(n) + ")", Arrangement(1, n, std::move(hs)), SymmetryKind::SH, reps};
}

FamilyInstance family_g(unsigned m, unsigned p, unsigned n) {
  if (m == 0 || p == 0 || m % p != 0)
    throw InvalidFamily("G(m,p,n) needs p dividing m, got m=" + std::to_string(m) +
                        ", p=" + std::to_string(p));
  std::vector<Hyperplane> hs;
  if (p < m)
    for (unsigned i = 0; i < n; ++i) hs.push_back(single_form(m, n, i, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      for (unsigned k = 0; k < m; ++k) hs.push_back(pair_form(m, n, i, j, -CycElem::root_power(m, k), 0));
  std::vector<RepresentativeEquation> reps;
  if (p < m && n >= 1) reps.push_back(rep1(m, 0));
  if (n >= 2) reps.push_back(rep2(m, num(m, -1), 0));
  const std::string name =
      "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  return {name, Arrangement(m, n, std::move(hs)), SymmetryKind::CSH, reps};
}

FamilyInstance family_by_name(const std::string& letter, const std::vector<unsigned>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidFamily("family " + letter + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (letter == "A") return need(1), family_a(params[0]);
  if (letter == "B") return need(1), family_b(params[0]);
  if (letter == "D") return need(1), family_d(params[0]);
  if (letter == "I") return need(1), family_i(params[0]);
  if (letter == "G") return need(3), family_g(params[0], params[1], params[2]);
  throw InvalidFamily("unknown family '" + letter + "'");
}

}  // namespace symtutte
