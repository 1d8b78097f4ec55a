#include "commprob/isoclinism.hpp"

#include <algorithm>

namespace commprob {

namespace {

// Greedy generators of the derived group drawn from commutator values only.
std::vector<Index> generators_among(const FiniteGroup& d, const std::vector<bool>& allowed) {
  std::vector<Index> gens;
  std::vector<bool> in(d.order(), false);
  in[d.identity()] = true;
  for (Index x = 0; x < d.order(); ++x) {
    if (!allowed[x] || in[x]) continue;
    gens.push_back(x);
    std::fill(in.begin(), in.end(), false);
    Subgroup span = subgroup_generated(d, gens);
    for (Index y : span.members()) in[y] = true;
  }
  return gens;
}

}  // namespace

PairingStructure commutator_pairing(const FiniteGroup& g) {
  Subgroup z = center(g);
  Subgroup gd = derived_subgroup(g);
  QuotientMap q = quotient_map(g, z);

  std::vector<Index> embedding;
  FiniteGroup d = subgroup_as_group(gd, &embedding);
  std::vector<Index> to_derived(g.order(), kNoIndex);
  for (std::size_t i = 0; i < gd.members().size(); ++i) to_derived[gd.members()[i]] = embedding[i];

  const std::size_t qn = q.group.order();
  std::vector<Index> pairing(qn * qn, kNoIndex);
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) {
      Index value = to_derived[g.commutator(a, b)];
      Index& slot = pairing[q.projection[a] * qn + q.projection[b]];
      if (slot == kNoIndex) {
        slot = value;
      } else if (slot != value) {
        throw Error("commutator pairing is not well defined on center cosets");
      }
    }
  }
  return PairingStructure{std::move(q.group), std::move(q.projection), std::move(d),
                          std::move(to_derived), std::move(pairing)};
}

std::optional<IsoclinismWitness> find_isoclinism(const PairingStructure& pg,
                                                 const PairingStructure& ph) {
  const FiniteGroup& qg = pg.inner_quotient;
  const FiniteGroup& qh = ph.inner_quotient;
  const FiniteGroup& dg = pg.derived;
  const FiniteGroup& dh = ph.derived;
  if (qg.order() != qh.order() || dg.order() != dh.order()) return std::nullopt;
  if (signature(qg) != signature(qh) || signature(dg) != signature(dh)) return std::nullopt;

  const std::size_t qn = qg.order();
  std::vector<bool> is_value(dg.order(), false);
  for (Index v : pg.pairing) is_value[v] = true;
  std::vector<Index> dgens = generators_among(dg, is_value);

  std::optional<IsoclinismWitness> found;
  enumerate_isomorphisms(qg, qh, [&](const std::vector<Index>& psi) {
    // The induced map on commutator values must be a function.
    std::vector<Index> phi(dg.order(), kNoIndex);
    for (Index a = 0; a < qn; ++a) {
      for (Index b = 0; b < qn; ++b) {
        Index from = pg.at(a, b);
        Index to = ph.at(psi[a], psi[b]);
        if (phi[from] == kNoIndex) {
          phi[from] = to;
        } else if (phi[from] != to) {
          return true;
        }
      }
    }
    std::vector<Index> images;
    for (Index x : dgens) images.push_back(phi[x]);
    auto ext = extend_homomorphism(dg, dgens, images, dh);
    if (!ext || !is_isomorphism(dg, dh, *ext)) return true;
    for (Index x = 0; x < dg.order(); ++x) {
      if (phi[x] != kNoIndex && phi[x] != (*ext)[x]) return true;
    }
    found = IsoclinismWitness{psi, *ext};
    return false;
  });
  return found;
}

std::optional<IsoclinismWitness> find_isoclinism(const FiniteGroup& g, const FiniteGroup& h) {
  // Cheap filters before building pairing tables.
  Subgroup zg = center(g);
  Subgroup zh = center(h);
  if (zg.index() != zh.index()) return std::nullopt;
  if (derived_subgroup(g).order() != derived_subgroup(h).order()) return std::nullopt;
  return find_isoclinism(commutator_pairing(g), commutator_pairing(h));
}

bool are_isoclinic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isoclinism(g, h).has_value();
}

bool verify_isoclinism(const PairingStructure& pg, const PairingStructure& ph,
                       const IsoclinismWitness& witness) {
  if (!is_isomorphism(pg.inner_quotient, ph.inner_quotient, witness.quotient_iso)) return false;
  if (!is_isomorphism(pg.derived, ph.derived, witness.derived_iso)) return false;
  const std::size_t qn = pg.inner_quotient.order();
  for (Index a = 0; a < qn; ++a) {
    for (Index b = 0; b < qn; ++b) {
      if (witness.derived_iso[pg.at(a, b)] !=
          ph.at(witness.quotient_iso[a], witness.quotient_iso[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_stem(const FiniteGroup& g) { return center(g).is_subset_of(derived_subgroup(g)); }

}  // namespace commprob
