#include "bracekit/isoclinism.hpp"

#include <stdexcept>

namespace bracekit {

IsoclinismData isoclinism_data(const SkewBrace& b) {
  IsoclinismData data;
  data.annihilator = annihilator(b);
  data.quotient = quotient_brace(b, data.annihilator);
  data.gamma2 = induced_sub_brace(b, series_term(b, SeriesKind::Gamma, 2));

  std::vector<Element> index(b.order(), kNoElement);
  for (Element i = 0; i < data.gamma2.elements.size(); ++i) index[data.gamma2.elements[i]] = i;

  const Element m = data.quotient_order();
  data.phi_plus.assign(std::size_t{m} * m, kNoElement);
  data.phi_star.assign(std::size_t{m} * m, kNoElement);
  // Every representative pair lands on the same cell; any disagreement means
  // the maps are not well defined.
  for (Element x = 0; x < b.order(); ++x) {
    for (Element y = 0; y < b.order(); ++y) {
      const std::size_t cell = std::size_t{data.quotient.coset_of[x]} * m + data.quotient.coset_of[y];
      const Element plus = index[b.gamma_plus(x, y)];
      const Element star = index[b.star(x, y)];
      if (plus == kNoElement || star == kNoElement) {
        throw std::logic_error("commutator or star product outside Γ₂(B)");
      }
      if (data.phi_plus[cell] == kNoElement) {
        data.phi_plus[cell] = plus;
        data.phi_star[cell] = star;
      } else if (data.phi_plus[cell] != plus || data.phi_star[cell] != star) {
        throw std::logic_error("φ maps are not well defined on B/Ann(B)");
      }
    }
  }
  return data;
}

bool is_isoclinism(const IsoclinismData& a, const IsoclinismData& b, const IsoclinismWitness& w) {
  const Element m = a.quotient_order();
  if (m != b.quotient_order() || w.xi.size() != m) return false;
  if (w.theta.size() != a.gamma2.brace.order() || a.gamma2.brace.order() != b.gamma2.brace.order()) {
    return false;
  }
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      if (w.theta(a.plus_at(i, j)) != b.plus_at(w.xi(i), w.xi(j))) return false;
      if (w.theta(a.star_at(i, j)) != b.star_at(w.xi(i), w.xi(j))) return false;
    }
  }
  return true;
}

std::optional<IsoclinismWitness> are_isoclinic(const IsoclinismData& a, const IsoclinismData& b) {
  if (a.quotient_order() != b.quotient_order()) return std::nullopt;
  if (a.gamma2.brace.order() != b.gamma2.brace.order()) return std::nullopt;
  const auto xis = brace_isomorphisms(a.quotient.brace, b.quotient.brace);
  if (xis.empty()) return std::nullopt;
  const auto thetas = brace_isomorphisms(a.gamma2.brace, b.gamma2.brace);
  for (const auto& xi : xis) {
    for (const auto& theta : thetas) {
      IsoclinismWitness w{xi, theta};
      if (is_isoclinism(a, b, w)) return w;
    }
  }
  return std::nullopt;
}

std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const SkewBrace& b) {
  return are_isoclinic(isoclinism_data(a), isoclinism_data(b));
}

bool is_stem(const SkewBrace& b) {
  return annihilator(b).is_subset_of(series_term(b, SeriesKind::Gamma, 2));
}

}  // namespace bracekit
