#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/filters.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/kite_element.hpp"
#include "kitebl/report.hpp"
#include "kitebl/structure.hpp"

namespace kitebl::io {

inline constexpr int format_version = 1;

/// Value of the "kind" field: "hoop", "bl", "kite-spec", "axiom-report".
/// Throws ParseError.
std::string detect_kind(std::string_view text);

// Every writer emits fields in a fixed order with one table row per line,
// so output is byte-stable. Readers throw ParseError on bad syntax or
// missing fields and StructuralError on malformed tables.

std::string to_text(const FiniteHoop& h);
FiniteHoop hoop_from_text(std::string_view text);

std::string to_text(const FiniteBL& b);
FiniteBL bl_from_text(std::string_view text);

std::string to_text(const AxiomReport& r);
AxiomReport report_from_text(std::string_view text);

/// A kite spec file names its hoop inline or by path.
struct KiteSpecFile {
  std::variant<FiniteHoop, std::string> hoop;
  KiteSpec spec;

  bool operator==(const KiteSpecFile&) const = default;
};

std::string to_text(const KiteSpecFile& f);
KiteSpecFile spec_file_from_text(std::string_view text);
/// Resolves a path-valued hoop relative to `base_dir`.
FiniteHoop resolve_hoop(const KiteSpecFile& f, const std::filesystem::path& base_dir);

/// Sorted index list, e.g. "[0,3,5]".
std::string to_text(const FilterSet& f);
std::string to_text(const CongruencePartition& p);
std::string to_text(const ComponentPartition& p);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view contents);

}  // namespace kitebl::io
