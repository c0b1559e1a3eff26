#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/isotopy.hpp"
#include "loopforge/loop.hpp"

namespace loopforge {

// ---- Cayley table text format --------------------------------------------
//
//   # optional comment lines start with '#'
//   n
//   n lines of n whitespace-separated integers in 0..n-1
//
// The writer emits no comments, single spaces and a trailing newline.

std::string format_table(const LoopTable& loop);
/// Throws Error(Parse) with "<source>:<line>:<column>" positions; validation
/// failures propagate from validate_table.
LoopTable parse_table(std::string_view text, const std::string& source = "<input>");
LoopTable read_table(const std::filesystem::path& path);
void write_table(const LoopTable& loop, const std::filesystem::path& path);

/// Source table, then "isotope f=<f> g=<g>", then the isotope table.
std::string format_isotope_record(const PrincipalIsotopeRecord& record);
PrincipalIsotopeRecord parse_isotope_record(std::string_view text,
                                            const std::string& source = "<input>");

/// 64-bit FNV-1a over the bytes of `format_table(loop)`, as 16 hex digits.
std::string content_id(const LoopTable& loop);

// ---- Generation -----------------------------------------------------------

struct CatalogEntry {
  LoopTable loop;
  bool associative = false;
  std::size_t s_subgroup_count = 0;
  std::string id;
};

struct GenerateFilters {
  bool nonassociative = false;
  bool require_s_subgroup = false;
  std::optional<std::size_t> limit;
  /// Order 6 (9408 tables) is refused unless set.
  bool allow_order_6 = false;
  Execution execution = Execution::Parallel;
};

/// Every loop of order n with identity 0 and row/column 0 in natural order,
/// exactly once, in lexicographic order of the flattened table. Throws
/// Error(OrderTooLarge) outside 2..5, or 6 without `allow_order_6`.
std::vector<CatalogEntry> generate_loops(std::size_t n, const GenerateFilters& filters = {});

/// Streaming variant (serial); return false from the callback to stop.
void for_each_loop(std::size_t n, const GenerateFilters& filters,
                   const std::function<bool(const CatalogEntry&)>& visit);

CatalogEntry make_entry(const LoopTable& loop);

struct Normalized {
  LoopTable loop;
  Perm relabel;  // old element -> new element
};

/// Relabels so the identity becomes 0 (swapping it with 0). Any relabeling
/// with e -> 0 puts row and column 0 in natural order.
Normalized normalize(const LoopTable& loop);

/// One representative per isomorphism class, in input order.
std::vector<CatalogEntry> isomorphism_class_representatives(
    const std::vector<CatalogEntry>& entries, const SearchConfig& config = {});

// ---- Catalog directories --------------------------------------------------
//
//   <dir>/<id>.loop         one table per entry
//   <dir>/index.tsv         "id<TAB>order<TAB>associative<TAB>s_subgroups"
//   <dir>/<id>.report.json  written by verification

inline constexpr std::string_view kIndexFile = "index.tsv";

void write_catalog(const std::filesystem::path& dir,
                   const std::vector<CatalogEntry>& entries);

struct IndexRow {
  std::string id;
  std::size_t order = 0;
  bool associative = false;
  std::size_t s_subgroups = 0;
};

std::vector<IndexRow> read_catalog_index(const std::filesystem::path& dir);

}  // namespace loopforge
