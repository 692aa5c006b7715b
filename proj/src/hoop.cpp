#include "kitebl/hoop.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "kitebl/errors.hpp"

namespace kitebl {

namespace {

void require_shape(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n) {
    throw StructuralError(std::string(what) + " table is " + std::to_string(t.size()) +
                          "x" + std::to_string(t.size()) + ", expected " +
                          std::to_string(n) + "x" + std::to_string(n));
  }
  if (!t.entries_below(n)) {
    throw StructuralError(std::string(what) + " table has an entry outside 0.." +
                          std::to_string(n - 1));
  }
}

std::vector<std::string> chain_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < n; ++i) names.push_back("e" + std::to_string(i));
  names.emplace_back("1");
  return names;
}

}  // namespace

FiniteHoop::FiniteHoop(Elem unit, Table mul, Table ldiv, Table rdiv, std::string name,
                       std::vector<std::string> element_names)
    : unit_(unit),
      mul_(std::move(mul)),
      ldiv_(std::move(ldiv)),
      rdiv_(std::move(rdiv)),
      name_(std::move(name)),
      names_(std::move(element_names)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw StructuralError("a hoop needs at least one element");
  require_shape(mul_, n, "mul");
  require_shape(ldiv_, n, "ldiv");
  require_shape(rdiv_, n, "rdiv");
  if (unit_ >= n) throw StructuralError("unit index out of range");
  if (!names_.empty()) {
    if (names_.size() != n) throw StructuralError("element name count differs from size");
    for (const auto& s : names_) {
      if (s.empty() || s.find_first_of(",:#") != std::string::npos) {
        throw StructuralError("element name '" + s + "' is empty or contains , : #");
      }
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructuralError("duplicate element names");
    }
  }
}

std::string FiniteHoop::element_name(Elem a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Elem> FiniteHoop::find_element(const std::string& name) const {
  for (Elem a = 0; a < size(); ++a) {
    if (element_name(a) == name) return a;
  }
  return std::nullopt;
}

FiniteHoop FiniteHoop::renamed(std::string name) const {
  FiniteHoop copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

AxiomReport check_pseudo_hoop(const FiniteHoop& h, ReportMode mode) {
  namespace ax = hoop_axioms;
  detail::Recorder rec(mode);
  const auto n = static_cast<Elem>(h.size());
  const Elem one = h.unit();

  for (Elem a = 0; a < n; ++a) {
    if (h.mul(a, one) != a || h.mul(one, a) != a) rec.record(ax::neutrality, {a});
    if (h.ldiv(a, a) != one || h.rdiv(a, a) != one) rec.record(ax::self_division, {a});
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem m1 = h.mul(h.rdiv(b, a), a);
      const Elem m2 = h.mul(h.rdiv(a, b), b);
      const Elem m3 = h.mul(a, h.ldiv(a, b));
      const Elem m4 = h.mul(b, h.ldiv(b, a));
      if (m1 != m2 || m1 != m3 || m1 != m4) rec.record(ax::meet_coincidence, {a, b});
      if ((h.ldiv(a, b) == one) != (h.rdiv(b, a) == one)) {
        rec.record(ax::order_consistency, {a, b});
      }
      for (Elem c = 0; c < n; ++c) {
        const Elem ab = h.mul(a, b);
        if (h.rdiv(c, ab) != h.rdiv(h.rdiv(c, b), a)) rec.record(ax::rdiv_of_product, {a, b, c});
        if (h.ldiv(ab, c) != h.ldiv(b, h.ldiv(a, c))) rec.record(ax::ldiv_of_product, {a, b, c});
        if (h.mul(ab, c) != h.mul(a, h.mul(b, c))) rec.record(ax::associativity, {a, b, c});
        const bool lhs = h.leq(ab, c);
        if (lhs != h.leq(b, h.ldiv(a, c)) || lhs != h.leq(a, h.rdiv(c, b))) {
          rec.record(ax::residuation, {a, b, c});
        }
      }
    }
  }

  for (Elem a = 0; a < n; ++a) {
    if (!h.leq(a, a)) rec.record(ax::partial_order, {a});
    if (!h.leq(a, one)) rec.record(ax::unit_is_top, {a});
    for (Elem b = 0; b < n; ++b) {
      if (a != b && h.leq(a, b) && h.leq(b, a)) rec.record(ax::partial_order, {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (h.leq(a, b) && h.leq(b, c) && !h.leq(a, c)) rec.record(ax::partial_order, {a, b, c});
      }
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem m = meet(h, a, b);
      bool glb = h.leq(m, a) && h.leq(m, b);
      for (Elem c = 0; glb && c < n; ++c) {
        if (h.leq(c, a) && h.leq(c, b) && !h.leq(c, m)) glb = false;
      }
      if (!glb) rec.record(ax::meet_is_glb, {a, b});
    }
  }
  return std::move(rec).take();
}

Relation derive_order(const FiniteHoop& h) {
  Relation r(h.size());
  for (Elem a = 0; a < h.size(); ++a) {
    for (Elem b = 0; b < h.size(); ++b) r.set(a, b, h.leq(a, b));
  }
  return r;
}

Elem meet(const FiniteHoop& h, Elem a, Elem b) { return h.mul(h.rdiv(b, a), a); }

std::optional<Elem> join(const FiniteHoop& h, Elem a, Elem b) {
  const auto n = static_cast<Elem>(h.size());
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (!h.leq(a, c) || !h.leq(b, c)) continue;
    if (!best || h.leq(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < n; ++c) {
    if (h.leq(a, c) && h.leq(b, c) && !h.leq(*best, c)) return std::nullopt;
  }
  return best;
}

bool check_basic(const FiniteHoop& h) {
  const auto n = static_cast<Elem>(h.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        // c/(b/a) <= c/(c/(a/b))
        if (!h.leq(h.rdiv(c, h.rdiv(b, a)), h.rdiv(c, h.rdiv(c, h.rdiv(a, b))))) return false;
        // (a\b)\c <= ((b\a)\c)\c
        if (!h.leq(h.ldiv(h.ldiv(a, b), c), h.ldiv(h.ldiv(h.ldiv(b, a), c), c))) return false;
      }
    }
  }
  return true;
}

bool check_wajsberg(const FiniteHoop& h) {
  const auto n = static_cast<Elem>(h.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (h.ldiv(h.rdiv(b, a), b) != h.ldiv(h.rdiv(a, b), a)) return false;
      if (h.rdiv(b, h.ldiv(a, b)) != h.rdiv(a, h.ldiv(b, a))) return false;
    }
  }
  return true;
}

bool check_commutative(const FiniteHoop& h) {
  const auto n = static_cast<Elem>(h.size());
  bool symmetric = true;
  bool divisions_agree = true;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      symmetric = symmetric && h.mul(a, b) == h.mul(b, a);
      divisions_agree = divisions_agree && h.ldiv(a, b) == h.rdiv(b, a);
    }
  }
  if (symmetric != divisions_agree) {
    throw std::logic_error("commutativity of mul disagrees with x\\y = y/x");
  }
  return symmetric;
}

FiniteHoop trivial_hoop() {
  return FiniteHoop(0, Table(1), Table(1), Table(1), "trivial", {"1"});
}

FiniteHoop godel_chain(std::size_t n) {
  if (n == 0) throw PreconditionError("godel_chain: size must be positive");
  Table mul(n), ldiv(n), rdiv(n);
  const auto top = static_cast<Elem>(n - 1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      mul(x, y) = std::min(x, y);
      ldiv(x, y) = x <= y ? top : y;
      rdiv(y, x) = ldiv(x, y);
    }
  }
  return FiniteHoop(top, std::move(mul), std::move(ldiv), std::move(rdiv),
                    "godel:" + std::to_string(n), chain_names(n));
}

FiniteHoop lukasiewicz_chain(std::size_t n) {
  if (n == 0) throw PreconditionError("lukasiewicz_chain: size must be positive");
  Table mul(n), ldiv(n), rdiv(n);
  const auto top = static_cast<long>(n - 1);
  for (long i = 0; i <= top; ++i) {
    for (long j = 0; j <= top; ++j) {
      const auto a = static_cast<Elem>(i), b = static_cast<Elem>(j);
      mul(a, b) = static_cast<Elem>(std::max(0L, i + j - top));
      ldiv(a, b) = static_cast<Elem>(std::min(top, top - i + j));
      rdiv(b, a) = ldiv(a, b);
    }
  }
  return FiniteHoop(static_cast<Elem>(top), std::move(mul), std::move(ldiv), std::move(rdiv),
                    "lukasiewicz:" + std::to_string(n), chain_names(n));
}

FiniteHoop direct_product(const FiniteHoop& h1, const FiniteHoop& h2) {
  const std::size_t n1 = h1.size(), n2 = h2.size(), n = n1 * n2;
  auto pair = [n2](Elem a, Elem b) { return static_cast<Elem>(a * n2 + b); };
  Table mul(n), ldiv(n), rdiv(n);
  std::vector<std::string> names(n);
  for (Elem a1 = 0; a1 < n1; ++a1) {
    for (Elem a2 = 0; a2 < n2; ++a2) {
      names[pair(a1, a2)] = "<" + h1.element_name(a1) + ";" + h2.element_name(a2) + ">";
      for (Elem b1 = 0; b1 < n1; ++b1) {
        for (Elem b2 = 0; b2 < n2; ++b2) {
          const Elem x = pair(a1, a2), y = pair(b1, b2);
          mul(x, y) = pair(h1.mul(a1, b1), h2.mul(a2, b2));
          ldiv(x, y) = pair(h1.ldiv(a1, b1), h2.ldiv(a2, b2));
          rdiv(x, y) = pair(h1.rdiv(a1, b1), h2.rdiv(a2, b2));
        }
      }
    }
  }
  return FiniteHoop(pair(h1.unit(), h2.unit()), std::move(mul), std::move(ldiv),
                    std::move(rdiv), "product(" + h1.name() + "," + h2.name() + ")",
                    std::move(names));
}

FiniteHoop ordinal_sum(const FiniteHoop& h1, const FiniteHoop& h2) {
  // Lower block: h1 without its unit, in h1's index order. Upper block: h2.
  std::vector<Elem> lower;
  for (Elem a = 0; a < h1.size(); ++a) {
    if (a != h1.unit()) lower.push_back(a);
  }
  const auto lo = static_cast<Elem>(lower.size());
  const std::size_t n = lower.size() + h2.size();
  const Elem one = lo + h2.unit();

  std::vector<Elem> lower_pos(h1.size(), one);  // h1's unit goes to the shared unit
  for (Elem k = 0; k < lo; ++k) lower_pos[lower[k]] = k;

  Table mul(n), ldiv(n), rdiv(n);
  std::vector<std::string> names(n);
  for (Elem x = 0; x < n; ++x) {
    names[x] = x < lo ? "l." + h1.element_name(lower[x]) : h2.element_name(x - lo);
    for (Elem y = 0; y < n; ++y) {
      const bool xl = x < lo, yl = y < lo;
      if (xl && yl) {
        mul(x, y) = lower_pos[h1.mul(lower[x], lower[y])];
        ldiv(x, y) = lower_pos[h1.ldiv(lower[x], lower[y])];
        rdiv(x, y) = lower_pos[h1.rdiv(lower[x], lower[y])];
      } else if (!xl && !yl) {
        mul(x, y) = lo + h2.mul(x - lo, y - lo);
        ldiv(x, y) = lo + h2.ldiv(x - lo, y - lo);
        rdiv(x, y) = lo + h2.rdiv(x - lo, y - lo);
      } else if (xl) {  // x below y
        mul(x, y) = x;
        ldiv(x, y) = one;
        rdiv(x, y) = x;
      } else {  // y below x
        mul(x, y) = y;
        ldiv(x, y) = y;
        rdiv(x, y) = one;
      }
    }
  }
  return FiniteHoop(one, std::move(mul), std::move(ldiv), std::move(rdiv),
                    "osum(" + h1.name() + "," + h2.name() + ")", std::move(names));
}

}  // namespace kitebl

namespace kitebl {

namespace {

class CatalogParser {
 public:
  explicit CatalogParser(std::string_view text) : s_(text) {}

  FiniteHoop parse_all() {
    FiniteHoop h = parse();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return h;
  }

 private:
  FiniteHoop parse() {
    const std::string word = identifier();
    if (word == "trivial") return trivial_hoop();
    if (word == "godel" || word == "lukasiewicz") {
      expect(':');
      const std::size_t n = number();
      if (n == 0) fail("chain size must be positive");
      return word == "godel" ? godel_chain(n) : lukasiewicz_chain(n);
    }
    if (word == "product" || word == "osum") {
      const bool paren = peek() == '(';
      expect(paren ? '(' : ':');
      FiniteHoop a = parse();
      expect(',');
      FiniteHoop b = parse();
      if (paren) expect(')');
      return word == "product" ? direct_product(a, b) : ordinal_sum(a, b);
    }
    fail("unknown catalog hoop '" + word + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a catalog name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1'000'000) fail("size too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a size");
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("catalog name '" + std::string(s_) + "': " + msg + " at offset " +
                         std::to_string(pos_),
                     pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteHoop catalog_hoop(std::string_view name) { return CatalogParser(name).parse_all(); }

}  // namespace kitebl
