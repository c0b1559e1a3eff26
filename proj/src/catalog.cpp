#include "loopforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "loopforge/error.hpp"

namespace loopforge {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, std::size_t first_number = 1) {
  std::vector<Line> lines;
  std::size_t number = first_number;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool is_skippable(std::string_view line) {
  if (!line.empty() && line.front() == '#') return true;
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line,
                              std::size_t column, const std::string& message) {
  throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + message);
}

struct Token {
  std::size_t column;  // 1-based
  std::size_t value;
};

std::vector<Token> tokenize(const std::string& source, const Line& line) {
  std::vector<Token> out;
  const std::string_view text = line.text;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j) {
      parse_error(source, line.number, i + 1,
                  "expected a non-negative integer, found '" +
                      std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back({i + 1, value});
    i = j;
  }
  return out;
}

LoopTable parse_lines(const std::vector<Line>& lines, const std::string& source,
                      std::size_t eof_line) {
  std::size_t n = 0;
  bool have_n = false;
  std::vector<std::vector<Element>> rows;
  for (const auto& line : lines) {
    if (is_skippable(line.text)) continue;
    const auto tokens = tokenize(source, line);
    if (!have_n) {
      if (tokens.size() != 1) {
        parse_error(source, line.number, tokens.size() > 1 ? tokens[1].column : 1,
                    "expected the order n alone on its line");
      }
      n = tokens[0].value;
      if (n == 0) parse_error(source, line.number, tokens[0].column, "order must be positive");
      have_n = true;
      continue;
    }
    if (rows.size() == n) {
      parse_error(source, line.number, tokens.front().column,
                  "unexpected content after " + std::to_string(n) + " rows");
    }
    if (tokens.size() != n) {
      const std::size_t column =
          tokens.size() > n ? tokens[n].column : line.text.size() + 1;
      parse_error(source, line.number, column,
                  "expected " + std::to_string(n) + " entries, found " +
                      std::to_string(tokens.size()));
    }
    std::vector<Element> row;
    row.reserve(n);
    for (const auto& t : tokens) {
      if (t.value >= n) {
        parse_error(source, line.number, t.column,
                    "entry " + std::to_string(t.value) + " is not below " + std::to_string(n));
      }
      row.push_back(static_cast<Element>(t.value));
    }
    rows.push_back(std::move(row));
  }
  if (!have_n) parse_error(source, eof_line, 1, "missing order line");
  if (rows.size() != n) {
    parse_error(source, eof_line, 1,
                "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  }
  return validate_table(rows);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

bool passes(const CatalogEntry& entry, const GenerateFilters& filters) {
  if (filters.nonassociative && entry.associative) return false;
  if (filters.require_s_subgroup && entry.s_subgroup_count == 0) return false;
  return true;
}

void check_generation_order(std::size_t n, const GenerateFilters& filters) {
  if (n < 2 || n > 6) {
    throw Error(ErrorKind::OrderTooLarge,
                "exhaustive generation supports orders 2..6, got " + std::to_string(n));
  }
  if (n == 6 && !filters.allow_order_6) {
    throw Error(ErrorKind::OrderTooLarge,
                "order 6 (9408 tables) requires the explicit order-6 flag");
  }
}

// Row-major completion of a normalized Latin square. Cells of row 0 and
// column 0 are fixed; the remaining cells are filled in increasing order so
// completions come out lexicographically.
class LatinCompleter {
 public:
  explicit LatinCompleter(std::size_t n)
      : n_(n), cells_(n * n), row_used_(n, 0), col_used_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      place(0, i, static_cast<Element>(i));
      if (i) place(i, 0, static_cast<Element>(i));
    }
  }

  std::size_t order() const { return n_; }

  /// Visits every completion from cell index `pos` (row-major) onward.
  template <typename Visit>
  bool complete(std::size_t pos, Visit&& visit) {
    while (pos < n_ * n_ && (pos / n_ == 0 || pos % n_ == 0)) ++pos;
    if (pos == n_ * n_) return visit(cells_);
    const std::size_t r = pos / n_, c = pos % n_;
    const std::uint32_t blocked = row_used_[r] | col_used_[c];
    for (Element v = 0; v < n_; ++v) {
      if (blocked & (1u << v)) continue;
      place(r, c, v);
      const bool go_on = complete(pos + 1, visit);
      unplace(r, c, v);
      if (!go_on) return false;
    }
    return true;
  }

  void place(std::size_t r, std::size_t c, Element v) {
    cells_[r * n_ + c] = v;
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
  }
  void unplace(std::size_t r, std::size_t c, Element v) {
    row_used_[r] &= ~(1u << v);
    col_used_[c] &= ~(1u << v);
  }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
};

LoopTable table_from_cells(const std::vector<Element>& cells, std::size_t n) {
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows[r].assign(cells.begin() + r * n, cells.begin() + (r + 1) * n);
  }
  return validate_table(rows);
}

// All valid fillings of row 1, lexicographic; these are the parallel tasks.
std::vector<std::vector<Element>> second_rows(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> row(n);
  std::uint32_t used = 1u << 1;
  row[0] = 1;
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == n) {
      out.push_back(row);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if ((used & (1u << v)) || v == c) continue;  // column c starts with c
      used |= 1u << v;
      row[c] = v;
      fill(c + 1);
      used &= ~(1u << v);
    }
  };
  fill(1);
  return out;
}

}  // namespace

std::string format_table(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::string out = std::to_string(n) + "\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += std::to_string(loop.at(x, y));
    }
    out += '\n';
  }
  return out;
}

LoopTable parse_table(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text);
  return parse_lines(lines, source, lines.empty() ? 1 : lines.back().number + 1);
}

LoopTable read_table(const std::filesystem::path& path) {
  return parse_table(read_file(path), path.string());
}

void write_table(const LoopTable& loop, const std::filesystem::path& path) {
  write_file(path, format_table(loop));
}

std::string format_isotope_record(const PrincipalIsotopeRecord& record) {
  return format_table(record.source) + "isotope f=" + std::to_string(record.f) +
         " g=" + std::to_string(record.g) + "\n" + format_table(record.result);
}

PrincipalIsotopeRecord parse_isotope_record(std::string_view text,
                                            const std::string& source) {
  const auto lines = split_lines(text);
  auto marker = std::find_if(lines.begin(), lines.end(), [](const Line& l) {
    return l.text.rfind("isotope ", 0) == 0;
  });
  if (marker == lines.end()) parse_error(source, 1, 1, "missing 'isotope f=<f> g=<g>' line");

  unsigned long f = 0, g = 0;
  char tail = 0;
  const std::string marker_text(marker->text);
  if (std::sscanf(marker_text.c_str(), "isotope f=%lu g=%lu%c", &f, &g, &tail) != 2) {
    parse_error(source, marker->number, 1, "malformed isotope line '" + marker_text + "'");
  }
  const std::vector<Line> before(lines.begin(), marker);
  const std::vector<Line> after(marker + 1, lines.end());
  PrincipalIsotopeRecord record{parse_lines(before, source, marker->number),
                                static_cast<Element>(f), static_cast<Element>(g),
                                parse_lines(after, source,
                                            lines.empty() ? 1 : lines.back().number + 1)};
  const auto expected = principal_isotope(record.source, record.f, record.g);
  if (!(expected.result == record.result)) {
    parse_error(source, marker->number, 1,
                "isotope table does not match the f,g-principal isotope of the source");
  }
  return record;
}

std::string content_id(const LoopTable& loop) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_table(loop)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

CatalogEntry make_entry(const LoopTable& loop) {
  return {loop, loop.associative(), s_subgroups(loop).size(), content_id(loop)};
}

void for_each_loop(std::size_t n, const GenerateFilters& filters,
                   const std::function<bool(const CatalogEntry&)>& visit) {
  check_generation_order(n, filters);
  if (filters.limit && *filters.limit == 0) return;
  std::size_t emitted = 0;
  LatinCompleter completer(n);
  completer.complete(0, [&](const std::vector<Element>& cells) {
    auto entry = make_entry(table_from_cells(cells, n));
    if (!passes(entry, filters)) return true;
    ++emitted;
    return visit(entry) && !(filters.limit && emitted >= *filters.limit);
  });
}

std::vector<CatalogEntry> generate_loops(std::size_t n, const GenerateFilters& filters) {
  check_generation_order(n, filters);
  const auto tasks = second_rows(n);
  std::vector<std::vector<CatalogEntry>> found(tasks.size());

  const auto run_task = [&](std::size_t t) {
    LatinCompleter completer(n);
    for (std::size_t c = 1; c < n; ++c) completer.place(1, c, tasks[t][c]);
    completer.complete(2 * n, [&](const std::vector<Element>& cells) {
      auto entry = make_entry(table_from_cells(cells, n));
      if (passes(entry, filters)) found[t].push_back(std::move(entry));
      return true;
    });
  };
  if (filters.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  } else {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  }

  std::vector<CatalogEntry> out;
  for (auto& part : found) {
    for (auto& entry : part) {
      if (filters.limit && out.size() >= *filters.limit) return out;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

Normalized normalize(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::vector<Element> relabel(n);
  for (Element x = 0; x < n; ++x) relabel[x] = x;
  std::swap(relabel[0], relabel[loop.identity()]);
  const Perm sigma(relabel);
  const Perm sigma_inv = inverse(sigma);
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      rows[a][b] = sigma[loop.at(sigma_inv[a], sigma_inv[b])];
    }
  }
  return {validate_table(rows), sigma};
}

std::vector<CatalogEntry> isomorphism_class_representatives(
    const std::vector<CatalogEntry>& entries, const SearchConfig& config) {
  std::vector<CatalogEntry> reps;
  for (const auto& entry : entries) {
    const bool known = std::any_of(reps.begin(), reps.end(), [&](const CatalogEntry& r) {
      return !isomorphisms(r.loop, entry.loop, config).empty();
    });
    if (!known) reps.push_back(entry);
  }
  return reps;
}

void write_catalog(const std::filesystem::path& dir,
                   const std::vector<CatalogEntry>& entries) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  std::string index = "# id\torder\tassociative\ts_subgroups\n";
  for (const auto& e : entries) {
    write_table(e.loop, dir / (e.id + ".loop"));
    index += e.id + "\t" + std::to_string(e.loop.order()) + "\t" +
             (e.associative ? "1" : "0") + "\t" + std::to_string(e.s_subgroup_count) + "\n";
  }
  write_file(dir / kIndexFile, index);
}

std::vector<IndexRow> read_catalog_index(const std::filesystem::path& dir) {
  const auto path = dir / kIndexFile;
  const std::string text = read_file(path);
  std::vector<IndexRow> rows;
  for (const auto& line : split_lines(text)) {
    if (is_skippable(line.text)) continue;
    std::istringstream in{std::string(line.text)};
    IndexRow row;
    int assoc = 0;
    if (!(in >> row.id >> row.order >> assoc >> row.s_subgroups)) {
      parse_error(path.string(), line.number, 1, "malformed index row");
    }
    row.associative = assoc != 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace loopforge
