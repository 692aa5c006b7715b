#include "kitebl/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kitebl/errors.hpp"
#include "kitebl/isomorphism.hpp"
#include "kitebl/kite.hpp"

namespace kitebl {

ComponentPartition connected_components(const KiteSpec& spec) {
  spec.validate();
  std::vector<Elem> parent(spec.i_size);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < spec.j_size; ++j) {
    const Elem a = find(spec.lambda[j]), b = find(spec.rho[j]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::map<Elem, std::size_t> slot;  // root -> component number, by least member
  ComponentPartition p;
  for (Elem i = 0; i < spec.i_size; ++i) {
    auto [it, fresh] = slot.try_emplace(find(i), p.components.size());
    if (fresh) p.components.emplace_back();
    p.components[it->second].push_back(i);
  }
  p.j_of.resize(p.components.size());
  for (Elem j = 0; j < spec.j_size; ++j) {
    const std::size_t c = slot.at(find(spec.lambda[j]));
    if (slot.at(find(spec.rho[j])) != c) {
      throw std::logic_error("lambda⁻¹(C) and rho⁻¹(C) differ");
    }
    p.j_of[c].push_back(j);
  }
  return p;
}

KiteSpec restrict_spec(const KiteSpec& spec, const std::vector<Elem>& i_indices,
                       const std::vector<Elem>& j_indices) {
  std::vector<Elem> pos(spec.i_size, ~Elem{0});
  for (Elem k = 0; k < i_indices.size(); ++k) pos[i_indices[k]] = k;
  KiteSpec r{i_indices.size(), j_indices.size(), {}, {}};
  for (Elem j : j_indices) {
    r.lambda.push_back(pos.at(spec.lambda[j]));
    r.rho.push_back(pos.at(spec.rho[j]));
  }
  r.validate();
  return r;
}

bool irreducibility_criterion(const FiniteHoop& h, const KiteSpec& spec, EnumerationOptions opt) {
  if (h.is_trivial()) {
    throw PreconditionError("irreducibility criterion needs a non-trivial hoop");
  }
  spec.validate();
  if (spec.i_size == 0) return true;
  return connected_components(spec).components.size() == 1 &&
         is_subdirectly_irreducible(h, opt).irreducible;
}

// ---------------------------------------------------------- classification

std::string KiteClass::tag() const {
  switch (shape) {
    case KiteShape::degenerate00: return "Degenerate00";
    case KiteShape::degenerate10: return "Degenerate10";
    case KiteShape::degenerate11: return "Degenerate11";
    case KiteShape::cyclic_nn: return "CyclicNN(" + std::to_string(n) + ")";
    case KiteShape::chain_n1n: return "ChainN1N(" + std::to_string(n) + ")";
    case KiteShape::not_si_pattern: return "NotSIPattern(" + reason + ")";
  }
  return "?";
}

namespace {

struct Relabelling {
  std::vector<Elem> i_map, j_map;
  std::vector<Elem> lambda, rho;  // in the new labels, indexed by new j

  auto key() const { return std::tie(lambda, rho); }
};

// Walk from `start` along lambda(j) -> rho(j) edges, forwards until the path
// ends or closes into a cycle, then backwards from `start`, numbering
// vertices and edges in visit order. A connected spec is a single directed
// path or cycle, so the walk reaches everything.
Relabelling walk(const KiteSpec& spec, Elem start) {
  constexpr Elem unset = ~Elem{0};
  const auto lambda_inv = spec.lambda_inverse();
  const auto rho_inv = spec.rho_inverse();
  Relabelling r{std::vector<Elem>(spec.i_size, unset), std::vector<Elem>(spec.j_size, unset), {}, {}};
  Elem next_i = 0, next_j = 0;
  r.i_map[start] = next_i++;
  for (Elem v = start;;) {
    const auto j = lambda_inv[v];
    if (!j || r.j_map[*j] != unset) break;
    r.j_map[*j] = next_j++;
    v = spec.rho[*j];
    if (r.i_map[v] != unset) break;
    r.i_map[v] = next_i++;
  }
  for (Elem v = start;;) {
    const auto j = rho_inv[v];
    if (!j || r.j_map[*j] != unset) break;
    r.j_map[*j] = next_j++;
    v = spec.lambda[*j];
    if (r.i_map[v] != unset) break;
    r.i_map[v] = next_i++;
  }
  if (next_i != spec.i_size || next_j != spec.j_size) {
    throw std::logic_error("connected spec is not a single path or cycle");
  }
  r.lambda.assign(spec.j_size, 0);
  r.rho.assign(spec.j_size, 0);
  for (Elem j = 0; j < spec.j_size; ++j) {
    r.lambda[r.j_map[j]] = r.i_map[spec.lambda[j]];
    r.rho[r.j_map[j]] = r.i_map[spec.rho[j]];
  }
  return r;
}

}  // namespace

KiteClass classify_finite(const KiteSpec& spec) {
  const auto comps = connected_components(spec);
  KiteClass c;
  if (comps.components.size() > 1) {
    c.reason = "disconnected";
    return c;
  }
  if (spec.i_size == 0) {
    c.shape = KiteShape::degenerate00;
    return c;
  }

  std::optional<Relabelling> best;
  for (Elem s = 0; s < spec.i_size; ++s) {
    auto r = walk(spec, s);
    if (!best || r.key() < best->key()) best = std::move(r);
  }
  c.i_relabel = best->i_map;
  c.j_relabel = best->j_map;

  const std::size_t ni = spec.i_size, nj = spec.j_size;
  auto matches = [&](std::size_t modulus) {
    for (Elem j = 0; j < nj; ++j) {
      if (best->lambda[j] != j || best->rho[j] != (j + 1) % modulus) return false;
    }
    return true;
  };
  if (ni == 1 && nj == 0) {
    c.shape = KiteShape::degenerate10;
  } else if (ni == 1 && nj == 1) {
    c.shape = KiteShape::degenerate11;
  } else if (ni == nj && matches(ni)) {
    c.shape = KiteShape::cyclic_nn;
    c.n = ni;
  } else if (ni == nj + 1 && matches(ni)) {
    c.shape = KiteShape::chain_n1n;
    c.n = nj;
  } else {
    c.reason = "unrecognized shape";
  }
  return c;
}

// ----------------------------------------------------------- decomposition

namespace {

// Image of a kite element under restriction to (i_indices, j_indices) and
// a coordinatewise hoop map.
KiteElement project(const KiteElement& x, const std::vector<Elem>& i_indices,
                    const std::vector<Elem>& j_indices, const std::vector<Elem>& coord_map) {
  KiteElement y{x.part, {}};
  for (Elem k : x.part == Part::upper ? i_indices : j_indices) y.coords.push_back(coord_map[x.coords[k]]);
  return y;
}

void require_injective(const std::vector<std::vector<Elem>>& images, std::size_t n) {
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> key;
    for (const auto& im : images) key.push_back(im[x]);
    if (!seen.insert(std::move(key)).second) {
      throw std::logic_error("joint map into the factors is not injective");
    }
  }
}

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  return id;
}

}  // namespace

std::vector<DecompositionFactor> decompose(const FiniteHoop& h, const KiteSpec& spec) {
  const FiniteBL k = build_kite(h, spec);
  const Kite kite(h, spec);
  const auto comps = connected_components(spec);

  if (comps.components.empty()) {
    return {{spec, FilterSet({k.one()}), {}, {}}};
  }

  std::vector<DecompositionFactor> out;
  std::vector<std::vector<Elem>> class_maps;
  for (std::size_t c = 0; c < comps.components.size(); ++c) {
    const auto& ci = comps.components[c];
    const auto& cj = comps.j_of[c];
    std::vector<Elem> members;
    for (Elem x = 0; x < k.size(); ++x) {
      const auto& e = k.elements()[x];
      if (e.part == Part::upper &&
          std::all_of(ci.begin(), ci.end(), [&](Elem i) { return e.coords[i] == h.unit(); })) {
        members.push_back(x);
      }
    }
    FilterSet n(std::move(members));
    if (!is_filter(k, n) || !is_normal(k, n)) {
      throw std::logic_error("component kernel is not a normal filter");
    }
    KiteSpec sub = restrict_spec(spec, ci, cj);
    const FiniteBL factor = build_kite(h, sub);
    if (!isomorphic(quotient(k, n), factor)) {
      throw std::logic_error("quotient by a component kernel is not the restricted kite");
    }
    class_maps.push_back(congruence_of(k, n).class_of);
    out.push_back({std::move(sub), std::move(n), ci, cj});
  }
  require_injective(class_maps, k.size());
  return out;
}

std::vector<FilterSet> irreducible_quotient_family(const FiniteHoop& h, EnumerationOptions opt) {
  if (h.is_trivial() || is_subdirectly_irreducible(h, opt).irreducible) {
    return {FilterSet({h.unit()})};
  }
  std::vector<FilterSet> family;
  for (const auto& f : enumerate_normal_filters(h, opt)) {
    if (f.size() == h.size()) continue;
    if (is_subdirectly_irreducible(quotient(h, f), opt).irreducible) family.push_back(f);
  }
  auto meet_is_trivial = [&](const std::vector<FilterSet>& fs, std::size_t skip) {
    std::optional<FilterSet> acc;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (k == skip) continue;
      acc = acc ? intersect(*acc, fs[k]) : fs[k];
    }
    return acc && acc->size() == 1;
  };
  if (!meet_is_trivial(family, family.size())) {
    throw std::logic_error("irreducible quotients do not separate the hoop");
  }
  for (std::size_t k = family.size(); k-- > 0;) {
    if (meet_is_trivial(family, k)) family.erase(family.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return family;
}

std::vector<SubdirectFactor> subdirect_representation(const FiniteHoop& h, const KiteSpec& spec,
                                                      EnumerationOptions opt) {
  const FiniteBL k = build_kite(h, spec);
  const auto source = signature_of(k);
  std::vector<SubdirectFactor> out;

  for (const auto& f : irreducible_quotient_family(h, opt)) {
    const bool identity = f.size() == 1;
    const FiniteHoop hq = identity ? h : quotient(h, f);
    const std::vector<Elem> coord_map = identity ? identity_map(h.size()) : congruence_of(h, f).class_of;

    for (auto& part : decompose(hq, spec)) {
      SubdirectFactor sf{hq, f, part.spec, part.i_indices, part.j_indices,
                         build_kite(hq, part.spec), {}};
      const Kite target(hq, part.spec);
      for (const auto& e : k.elements()) {
        sf.surjection.push_back(target.index_of(project(e, part.i_indices, part.j_indices, coord_map)));
      }
      if (!is_homomorphism(source, signature_of(sf.kite), sf.surjection)) {
        throw std::logic_error("factor map is not a homomorphism");
      }
      std::vector<char> hit(sf.kite.size(), 0);
      for (Elem y : sf.surjection) hit[y] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
        throw std::logic_error("factor map is not surjective");
      }
      if (!hq.is_trivial() && !irreducibility_criterion(hq, part.spec, opt)) {
        throw std::logic_error("factor fails the irreducibility criterion");
      }
      out.push_back(std::move(sf));
    }
  }

  std::vector<std::vector<Elem>> maps;
  for (const auto& sf : out) maps.push_back(sf.surjection);
  require_injective(maps, k.size());
  return out;
}

}  // namespace kitebl
