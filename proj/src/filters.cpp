#include "kitebl/filters.hpp"

#include <sstream>

namespace kitebl {

FilterSet::FilterSet(std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FilterSet intersect(const FilterSet& a, const FilterSet& b) {
  std::vector<Elem> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return FilterSet(std::move(out));
}

namespace {

std::string describe(const FilterSet& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < f.size(); ++k) os << (k ? "," : "") << f.members()[k];
  os << ']';
  return os.str();
}

template <class Op>
Table induced(const CongruencePartition& p, Op op) {
  const std::size_t m = p.classes.size();
  Table t(m);
  for (Elem c = 0; c < m; ++c) {
    for (Elem d = 0; d < m; ++d) t(c, d) = p.class_of[op(p.classes[c].front(), p.classes[d].front())];
  }
  return t;
}

}  // namespace

FiniteHoop quotient(const FiniteHoop& h, const FilterSet& f) {
  const auto p = congruence_of(h, f);
  std::vector<std::string> names;
  for (const auto& cls : p.classes) {
    names.push_back(p.class_of[cls.front()] == p.class_of[h.unit()]
                        ? std::string("1")
                        : "[" + h.element_name(cls.front()) + "]");
  }
  return FiniteHoop(p.class_of[h.unit()], induced(p, [&](Elem a, Elem b) { return h.mul(a, b); }),
                    induced(p, [&](Elem a, Elem b) { return h.ldiv(a, b); }),
                    induced(p, [&](Elem a, Elem b) { return h.rdiv(a, b); }),
                    h.name() + "/" + describe(f), std::move(names));
}

FiniteBL quotient(const FiniteBL& b, const FilterSet& f) {
  const auto p = congruence_of(b, f);
  FiniteBL::Tables t{induced(p, [&](Elem x, Elem y) { return b.mul(x, y); }),
                     induced(p, [&](Elem x, Elem y) { return b.ldiv(x, y); }),
                     induced(p, [&](Elem x, Elem y) { return b.rdiv(x, y); }),
                     induced(p, [&](Elem x, Elem y) { return b.meet(x, y); }),
                     induced(p, [&](Elem x, Elem y) { return b.join(x, y); })};
  std::vector<std::string> labels;
  for (const auto& cls : p.classes) labels.push_back("[" + b.label(cls.front()) + "]");
  return FiniteBL(p.class_of[b.zero()], p.class_of[b.one()], std::move(t),
                  b.name() + "/" + describe(f), std::move(labels), {},
                  "quotient of " + b.name() + " by filter " + describe(f));
}

}  // namespace kitebl
