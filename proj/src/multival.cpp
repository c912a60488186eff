#include "toric/multival.hpp"

#include <algorithm>
#include <bit>

#include "toric/error.hpp"

namespace toric {

FunctionalMultiset::FunctionalMultiset(std::vector<IntVector> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool FunctionalMultiset::contains(const IntVector& u) const {
  return std::binary_search(elements_.begin(), elements_.end(), u);
}

FunctionalMultiset restrict_to(const FunctionalMultiset& s, const Cone& face) {
  Sublattice ann = annihilator(span(face));
  std::vector<IntVector> out;
  for (const auto& u : s.elements()) out.push_back(ann.reduce(u));
  return FunctionalMultiset(std::move(out));
}

std::vector<IntVector> facet_functionals(const Cone& sigma) {
  if (!sigma.is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "cone is not full-dimensional");
  if (!sigma.is_pointed()) throw Error(ErrorKind::NotPointed, "cone contains a line");
  return sigma.inequalities();
}

NontrivialConstruction construct_nontrivial(const Fan& fan, std::optional<std::size_t> sigma, long scaling) {
  if (scaling < 1) throw Error(ErrorKind::InvalidInput, "scaling must be positive");
  std::vector<std::size_t> full;
  for (std::size_t i = 0; i < fan.maximal_count(); ++i)
    if (fan.maximal_cone(i).is_full_dimensional()) full.push_back(i);
  if (full.size() <= 1) {
    throw Error(ErrorKind::HypothesisFailed, "need more than one maximal cone of full dimension");
  }
  std::size_t chosen = sigma.value_or(full.front());
  if (chosen >= fan.maximal_count()) throw Error(ErrorKind::InvalidInput, "cone index out of range");

  NontrivialConstruction out;
  out.sigma = chosen;
  out.facet_functionals = facet_functionals(fan.maximal_cone(chosen));
  for (auto& l : out.facet_functionals) l = scaled(l, Int(scaling));

  const std::size_t k = out.facet_functionals.size();
  if (k >= 30) throw Error(ErrorKind::InvalidInput, "too many facets for subset enumeration");
  std::vector<IntVector> odd, even;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    IntVector sum(fan.rank(), Int(0));
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) sum = add(sum, out.facet_functionals[i]);
    (std::popcount(mask) % 2 == 1 ? odd : even).push_back(std::move(sum));
  }
  out.odd = FunctionalMultiset(std::move(odd));
  out.even = FunctionalMultiset(std::move(even));

  out.function.fan = fan;
  for (std::size_t i = 0; i < fan.maximal_count(); ++i)
    out.function.multisets.push_back(i == chosen ? out.odd : out.even);
  return out;
}

ConsistencyReport check_consistency(const MultivaluedCPL& f) {
  ConsistencyReport report;
  const Fan& fan = f.fan;
  for (std::size_t i = 0; i < fan.maximal_count(); ++i) {
    for (std::size_t j = i + 1; j < fan.maximal_count(); ++j) {
      RayIndices common;
      const auto& a = fan.maximal_cones()[i];
      const auto& b = fan.maximal_cones()[j];
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      const FanCone* face = fan.cone_by_rays(common);
      Cone gamma = face ? face->cone : Cone::zero(fan.rank());
      if (restrict_to(f.multisets[i], gamma) != restrict_to(f.multisets[j], gamma)) {
        report.consistent = false;
        report.mismatches.push_back({i, j, common});
      }
    }
  }
  return report;
}

TrivialityResult is_trivial(const MultivaluedCPL& f) {
  const Fan& fan = f.fan;
  std::optional<std::size_t> ref;
  for (std::size_t i = 0; i < fan.maximal_count() && !ref; ++i)
    if (fan.maximal_cone(i).is_full_dimensional()) ref = i;
  if (!ref) throw Error(ErrorKind::NoFullDimensionalCone, "no full-dimensional maximal cone");
  if (!check_consistency(f).consistent) throw Error(ErrorKind::Inconsistent, "multivalued function is inconsistent");

  TrivialityResult result;
  result.reference_cone = *ref;
  const FunctionalMultiset& candidate = f.multisets[*ref];
  for (std::size_t i = 0; i < fan.maximal_count(); ++i) {
    const Cone& c = fan.maximal_cone(i);
    if (restrict_to(candidate, c) != restrict_to(f.multisets[i], c)) {
      result.witness_cone = i;
      return result;
    }
  }
  result.trivial = true;
  return result;
}

MultivaluedCPL from_cpl(const Fan& fan, const CPLFunction& f) {
  MultivaluedCPL out{fan, {}};
  for (const auto& piece : f.pieces) out.multisets.push_back(FunctionalMultiset({to_int(piece)}));
  return out;
}

std::vector<Polynomial> elementary_symmetric(const MultivaluedCPL& f, std::size_t i) {
  if (i < 1 || i > f.degree()) throw Error(ErrorKind::DegreeOutOfRange, "symmetric function index out of range");
  std::vector<Polynomial> out;
  for (const auto& s : f.multisets) out.push_back(elementary_symmetric(s.elements(), i, f.fan.rank()));
  return out;
}

}  // namespace toric
