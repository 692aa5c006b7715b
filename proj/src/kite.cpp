#include "kitebl/kite.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "kitebl/errors.hpp"

namespace kitebl {

// ---------------------------------------------------------------- KiteSpec

namespace {

std::vector<std::optional<Elem>> partial_inverse(const std::vector<Elem>& map,
                                                 std::size_t i_size) {
  std::vector<std::optional<Elem>> inv(i_size);
  for (Elem j = 0; j < map.size(); ++j) inv[map[j]] = j;
  return inv;
}

void check_injection(const std::vector<Elem>& map, std::size_t i_size, const char* what) {
  std::vector<bool> seen(i_size, false);
  for (Elem v : map) {
    if (v >= i_size) {
      throw PreconditionError(std::string(what) + " maps into " + std::to_string(v) +
                              ", outside I of size " + std::to_string(i_size));
    }
    if (seen[v]) {
      throw PreconditionError(std::string(what) + " is not injective (value " +
                              std::to_string(v) + " repeats)");
    }
    seen[v] = true;
  }
}

}  // namespace

void KiteSpec::validate() const {
  if (lambda.size() != j_size || rho.size() != j_size) {
    throw PreconditionError("lambda and rho must have exactly j_size = " +
                            std::to_string(j_size) + " entries");
  }
  if (j_size > i_size) throw PreconditionError("j_size exceeds i_size");
  check_injection(lambda, i_size, "lambda");
  check_injection(rho, i_size, "rho");
}

std::vector<std::optional<Elem>> KiteSpec::lambda_inverse() const {
  return partial_inverse(lambda, i_size);
}

std::vector<std::optional<Elem>> KiteSpec::rho_inverse() const {
  return partial_inverse(rho, i_size);
}

bool KiteSpec::images_equal() const {
  return std::set<Elem>(lambda.begin(), lambda.end()) == std::set<Elem>(rho.begin(), rho.end());
}

bool KiteSpec::images_cover() const { return images_equal() && j_size == i_size; }

// -------------------------------------------------------------------- Kite

Kite::Kite(FiniteHoop hoop, KiteSpec spec) : hoop_(std::move(hoop)), spec_(std::move(spec)) {
  spec_.validate();
  lambda_inv_ = spec_.lambda_inverse();
  rho_inv_ = spec_.rho_inverse();
  const auto n = static_cast<Elem>(hoop_.size());
  hoop_meet_ = Table(n);
  hoop_join_.resize(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      hoop_meet_(a, b) = kitebl::meet(hoop_, a, b);
      hoop_join_[a * n + b] = kitebl::join(hoop_, a, b);
    }
  }
}

Elem Kite::hoop_meet(Elem a, Elem b) const { return hoop_meet_(a, b); }

Elem Kite::hoop_join(Elem a, Elem b) const {
  const auto& j = hoop_join_[a * hoop_.size() + b];
  if (!j) throw PreconditionError("hoop has no join for a coordinate pair");
  return *j;
}

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::size_t Kite::lower_size() const {
  return checked_pow(hoop_.size(), spec_.j_size, max_kite_size * max_kite_size);
}

std::size_t Kite::size(std::size_t limit) const {
  const std::size_t lo = checked_pow(hoop_.size(), spec_.j_size, limit);
  const std::size_t up = checked_pow(hoop_.size(), spec_.i_size, limit);
  if (lo > limit || up > limit || lo + up > limit) {
    const auto size = std::max(lo + up, limit + 1);
    throw BoundExceeded(size, limit,
                        "kite would have at least " + std::to_string(size) +
                            " elements, the limit is " + std::to_string(limit));
  }
  return lo + up;
}

KiteElement Kite::element(Elem index) const {
  const std::size_t n = hoop_.size();
  const std::size_t lo = lower_size();
  KiteElement x;
  std::size_t v = index;
  if (v < lo) {
    x.part = Part::lower;
    x.coords.resize(spec_.j_size);
  } else {
    x.part = Part::upper;
    x.coords.resize(spec_.i_size);
    v -= lo;
  }
  for (std::size_t k = x.coords.size(); k-- > 0;) {
    x.coords[k] = static_cast<Elem>(v % n);
    v /= n;
  }
  if (v != 0) throw StructuralError("kite element index out of range");
  return x;
}

void Kite::check(const KiteElement& x) const {
  const std::size_t want = x.part == Part::lower ? spec_.j_size : spec_.i_size;
  if (x.coords.size() != want) {
    throw StructuralError("kite element has " + std::to_string(x.coords.size()) +
                          " coordinates, expected " + std::to_string(want));
  }
  for (Elem c : x.coords) {
    if (c >= hoop_.size()) throw StructuralError("kite coordinate outside the hoop carrier");
  }
}

Elem Kite::index_of(const KiteElement& x) const {
  check(x);
  std::size_t v = 0;
  for (Elem c : x.coords) v = v * hoop_.size() + c;
  if (x.part == Part::upper) v += lower_size();
  return static_cast<Elem>(v);
}

KiteElement Kite::zero() const {
  return {Part::lower, std::vector<Elem>(spec_.j_size, hoop_.unit())};
}

KiteElement Kite::one() const {
  return {Part::upper, std::vector<Elem>(spec_.i_size, hoop_.unit())};
}

KiteElement Kite::mul(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  const auto& h = hoop_;
  KiteElement r;
  if (x.part == Part::upper && y.part == Part::upper) {
    r.part = Part::upper;
    for (std::size_t i = 0; i < spec_.i_size; ++i) r.coords.push_back(h.mul(x.coords[i], y.coords[i]));
  } else if (x.part == Part::upper) {
    // <a>·<f̄> = <(f_j / a_λ(j))‾>
    r.part = Part::lower;
    for (std::size_t j = 0; j < spec_.j_size; ++j) {
      r.coords.push_back(h.rdiv(y.coords[j], x.coords[spec_.lambda[j]]));
    }
  } else if (y.part == Part::upper) {
    // <f̄>·<a> = <(a_ρ(j) \ f_j)‾>
    r.part = Part::lower;
    for (std::size_t j = 0; j < spec_.j_size; ++j) {
      r.coords.push_back(h.ldiv(y.coords[spec_.rho[j]], x.coords[j]));
    }
  } else {
    return zero();
  }
  return r;
}

KiteElement Kite::ldiv(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  const auto& h = hoop_;
  KiteElement r;
  if (x.part == Part::upper && y.part == Part::upper) {
    r.part = Part::upper;
    for (std::size_t i = 0; i < spec_.i_size; ++i) r.coords.push_back(h.ldiv(x.coords[i], y.coords[i]));
  } else if (x.part == Part::upper) {
    // <a> \ <f̄> = <(f_j · a_λ(j))‾>
    r.part = Part::lower;
    for (std::size_t j = 0; j < spec_.j_size; ++j) {
      r.coords.push_back(h.mul(y.coords[j], x.coords[spec_.lambda[j]]));
    }
  } else if (y.part == Part::lower) {
    // <f̄> \ <ḡ> = <a_i>, a_i = f_k / g_k for k = ρ⁻¹(i), else 1
    r.part = Part::upper;
    for (std::size_t i = 0; i < spec_.i_size; ++i) {
      const auto k = rho_inv_[i];
      r.coords.push_back(k ? h.rdiv(x.coords[*k], y.coords[*k]) : h.unit());
    }
  } else {
    return one();
  }
  return r;
}

KiteElement Kite::rdiv(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  const auto& h = hoop_;
  KiteElement r;
  if (x.part == Part::upper && y.part == Part::upper) {
    r.part = Part::upper;
    for (std::size_t i = 0; i < spec_.i_size; ++i) r.coords.push_back(h.rdiv(x.coords[i], y.coords[i]));
  } else if (x.part == Part::lower && y.part == Part::upper) {
    // <f̄> / <a> = <(a_ρ(j) · f_j)‾>
    r.part = Part::lower;
    for (std::size_t j = 0; j < spec_.j_size; ++j) {
      r.coords.push_back(h.mul(y.coords[spec_.rho[j]], x.coords[j]));
    }
  } else if (x.part == Part::lower) {
    // <ḡ> / <f̄> = <b_i>, b_i = g_k \ f_k for k = λ⁻¹(i), else 1
    r.part = Part::upper;
    for (std::size_t i = 0; i < spec_.i_size; ++i) {
      const auto k = lambda_inv_[i];
      r.coords.push_back(k ? h.ldiv(x.coords[*k], y.coords[*k]) : h.unit());
    }
  } else {
    return one();
  }
  return r;
}

bool Kite::leq(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  if (x.part != y.part) return x.part == Part::lower;
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    const bool ok = x.part == Part::upper ? hoop_.leq(x.coords[k], y.coords[k])
                                          : hoop_.leq(y.coords[k], x.coords[k]);
    if (!ok) return false;
  }
  return true;
}

KiteElement Kite::meet(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  if (x.part != y.part) return x.part == Part::lower ? x : y;
  KiteElement r{x.part, {}};
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    // The lower copy is order-reversed, so its meet is the hoop join.
    r.coords.push_back(x.part == Part::upper ? hoop_meet(x.coords[k], y.coords[k])
                                             : hoop_join(x.coords[k], y.coords[k]));
  }
  return r;
}

KiteElement Kite::join(const KiteElement& x, const KiteElement& y) const {
  check(x);
  check(y);
  if (x.part != y.part) return x.part == Part::upper ? x : y;
  KiteElement r{x.part, {}};
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    r.coords.push_back(x.part == Part::upper ? hoop_join(x.coords[k], y.coords[k])
                                             : hoop_meet(x.coords[k], y.coords[k]));
  }
  return r;
}

std::pair<KiteElement, KiteElement> Kite::negations(const KiteElement& x) const {
  const KiteElement z = zero();
  return {rdiv(z, x), ldiv(x, z)};
}

std::string Kite::format(const KiteElement& x, LiteralStyle style) const {
  check(x);
  std::string s = x.part == Part::lower ? "L" : "U";
  s += style == LiteralStyle::names ? ':' : '#';
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    if (k) s += ',';
    s += style == LiteralStyle::names ? hoop_.element_name(x.coords[k])
                                      : std::to_string(x.coords[k]);
  }
  return s;
}

KiteElement Kite::parse(std::string_view literal) const {
  if (literal.size() < 2 || (literal[0] != 'L' && literal[0] != 'U') ||
      (literal[1] != ':' && literal[1] != '#')) {
    throw StructuralError("bad kite element literal '" + std::string(literal) +
                          "' (expected L:..., U:..., L#... or U#...)");
  }
  KiteElement x;
  x.part = literal[0] == 'L' ? Part::lower : Part::upper;
  const bool by_index = literal[1] == '#';
  std::string_view rest = literal.substr(2);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    if (by_index) {
      Elem v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw StructuralError("bad coordinate '" + std::string(tok) + "' in kite literal");
      }
      x.coords.push_back(v);
    } else {
      const auto e = hoop_.find_element(std::string(tok));
      if (!e) throw StructuralError("unknown hoop element '" + std::string(tok) + "'");
      x.coords.push_back(*e);
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw StructuralError("trailing comma in kite literal");
  }
  check(x);
  return x;
}

FiniteBL Kite::materialize(std::size_t limit) const {
  const std::size_t n = size(limit);
  std::vector<KiteElement> elems;
  elems.reserve(n);
  for (Elem e = 0; e < n; ++e) elems.push_back(element(e));

  FiniteBL::Tables t{Table(n), Table(n), Table(n), Table(n), Table(n)};
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const auto& x = elems[a];
      const auto& y = elems[b];
      t.mul(a, b) = index_of(mul(x, y));
      t.ldiv(a, b) = index_of(ldiv(x, y));
      t.rdiv(a, b) = index_of(rdiv(x, y));
      t.meet(a, b) = index_of(meet(x, y));
      t.join(a, b) = index_of(join(x, y));
    }
  }
  std::vector<std::string> labels;
  const auto style = hoop_.element_names().empty() ? LiteralStyle::indices : LiteralStyle::names;
  for (const auto& x : elems) labels.push_back(format(x, style));

  std::string name = "kite(" + hoop_.name() + ";I=" + std::to_string(spec_.i_size) +
                     ";J=" + std::to_string(spec_.j_size) + ")";
  return FiniteBL(index_of(zero()), index_of(one()), std::move(t), std::move(name),
                  std::move(labels), std::move(elems));
}

// --------------------------------------------------------------- builders

FiniteBL build_kite(const FiniteHoop& h, const KiteSpec& spec, BuildOptions options) {
  spec.validate();
  const auto report = check_pseudo_hoop(h);
  if (!report.passed()) {
    throw PreconditionError("input is not a pseudo hoop (axiom " +
                            report.violations.front().axiom + " fails)");
  }
  const bool basic = check_basic(h);
  if (!basic && !options.force) {
    throw PreconditionError("hoop is not basic; the kite construction requires a basic pseudo hoop");
  }
  FiniteBL k = Kite(h, spec).materialize(options.max_size);
  if (!basic) {
    return FiniteBL(k.zero(), k.one(), k.tables(), k.name(), k.labels(), k.elements(),
                    "unverified: hoop is not basic");
  }
  return k;
}

std::pair<Elem, Elem> negations(const FiniteBL& b, Elem x) {
  return {b.rdiv(b.zero(), x), b.ldiv(x, b.zero())};
}

NegationCheck is_good(const FiniteBL& b) {
  for (Elem x = 0; x < b.size(); ++x) {
    const auto [minus, tilde] = negations(b, x);
    const Elem minus_tilde = negations(b, minus).second;
    const Elem tilde_minus = negations(b, tilde).first;
    if (minus_tilde != tilde_minus) return {false, x};
  }
  return {};
}

NegationCheck is_pseudo_mv(const FiniteBL& b) {
  for (Elem x = 0; x < b.size(); ++x) {
    const auto [minus, tilde] = negations(b, x);
    if (negations(b, minus).second != x || negations(b, tilde).first != x) return {false, x};
  }
  return {};
}

}  // namespace kitebl
