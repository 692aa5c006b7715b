#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kitebl {

/// Carrier index of a finite algebra. Elements are 0..size-1.
using Elem = std::uint32_t;

/// Square operation table, row-major. `t(a, b)` is the value of `a op b`.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), data_(n * n, fill) {}

  /// Throws StructuralError unless `rows` is square.
  static Table from_rows(const std::vector<std::vector<Elem>>& rows,
                         std::string_view what = "table");

  std::size_t size() const noexcept { return n_; }

  Elem operator()(Elem a, Elem b) const noexcept { return data_[a * n_ + b]; }
  Elem& operator()(Elem a, Elem b) noexcept { return data_[a * n_ + b]; }

  std::vector<std::vector<Elem>> rows() const;

  /// True iff every entry is a valid carrier index.
  bool entries_below(std::size_t bound) const noexcept;

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// Dense boolean relation on a carrier.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(Elem a, Elem b) const noexcept { return data_[a * n_ + b] != 0; }
  void set(Elem a, Elem b, bool v = true) noexcept { data_[a * n_ + b] = v ? 1 : 0; }

  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> data_;
};

}  // namespace kitebl
