#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kitebl/table.hpp"

namespace kitebl {

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;

  bool operator==(const Violation&) const = default;
};

enum class ReportMode {
  first_witness,  // one violation per axiom, the first in canonical order
  all_witnesses,
};

struct AxiomReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool violated(std::string_view axiom) const noexcept;
  const Violation* first(std::string_view axiom) const noexcept;

  bool operator==(const AxiomReport&) const = default;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(ReportMode mode) : mode_(mode) {}

  void record(std::string_view axiom, std::vector<Elem> witness);

  // Sweeps can stop early once an axiom has its witness.
  bool saturated(std::string_view axiom) const noexcept {
    return mode_ == ReportMode::first_witness && report_.violated(axiom);
  }

  AxiomReport take() && { return std::move(report_); }

 private:
  ReportMode mode_;
  AxiomReport report_;
};

}  // namespace detail
}  // namespace kitebl
