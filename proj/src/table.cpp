#include "kitebl/table.hpp"

#include <algorithm>

#include "kitebl/errors.hpp"
#include "kitebl/report.hpp"

namespace kitebl {

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows,
                       std::string_view what) {
  const std::size_t n = rows.size();
  Table t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw StructuralError(std::string(what) + ": row " + std::to_string(a) +
                            " has " + std::to_string(rows[a].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      t(static_cast<Elem>(a), static_cast<Elem>(b)) = rows[a][b];
    }
  }
  return t;
}

std::vector<std::vector<Elem>> Table::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    out[a].assign(data_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  }
  return out;
}

bool Table::entries_below(std::size_t bound) const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [bound](Elem e) { return e < bound; });
}

bool AxiomReport::violated(std::string_view axiom) const noexcept {
  return first(axiom) != nullptr;
}

const Violation* AxiomReport::first(std::string_view axiom) const noexcept {
  auto it = std::find_if(violations.begin(), violations.end(),
                         [&](const Violation& v) { return v.axiom == axiom; });
  return it == violations.end() ? nullptr : &*it;
}

void detail::Recorder::record(std::string_view axiom, std::vector<Elem> witness) {
  if (saturated(axiom)) return;
  report_.violations.push_back({std::string(axiom), std::move(witness)});
}

}  // namespace kitebl
