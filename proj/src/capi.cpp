#include "bperm/bperm.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bperm/classes.hpp"
#include "bperm/enumeration.hpp"
#include "bperm/harness.hpp"
#include "bperm/patterns.hpp"
#include "bperm/tableaux.hpp"

struct bperm_signed {
  bperm::SignedPermutation value;
};

struct bperm_strings {
  std::vector<std::string> items;
};

struct bperm_table {
  bperm::SequenceTable table;
  std::vector<std::string> counts;
};

struct bperm_reports {
  std::vector<bperm::CheckReport> reports;
};

namespace {

thread_local std::string last_error;

bperm_status to_status(bperm::Errc code) {
  using bperm::Errc;
  switch (code) {
    case Errc::invalid_window: return BPERM_INVALID_WINDOW;
    case Errc::invalid_permutation: return BPERM_INVALID_PERMUTATION;
    case Errc::index_out_of_range: return BPERM_INDEX_OUT_OF_RANGE;
    case Errc::parse_error: return BPERM_PARSE_ERROR;
    case Errc::pattern_too_large: return BPERM_PATTERN_TOO_LARGE;
    case Errc::size_cap_exceeded: return BPERM_SIZE_CAP_EXCEEDED;
    case Errc::unknown_check: return BPERM_UNKNOWN_CHECK;
    case Errc::not_colayered: return BPERM_NOT_COLAYERED;
    case Errc::not_in_132_class: return BPERM_NOT_IN_132_CLASS;
    case Errc::unsupported_method: return BPERM_UNSUPPORTED_METHOD;
    case Errc::invalid_argument: return BPERM_INVALID_ARGUMENT;
    case Errc::io_error: return BPERM_IO_ERROR;
  }
  return BPERM_INTERNAL_ERROR;
}

template <class F>
bperm_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return BPERM_OK;
  } catch (const bperm::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return BPERM_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown exception";
    return BPERM_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw bperm::Error(bperm::Errc::invalid_argument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Range>
void copy_out(const Range& values, int* out, std::size_t capacity) {
  require(out, "output buffer");
  if (values.size() > capacity) throw bperm::Error(bperm::Errc::invalid_argument, "output buffer too small");
  std::size_t i = 0;
  for (auto x : values) out[i++] = static_cast<int>(x);
}

int checked_size(int n) {
  if (n < 0) throw bperm::Error(bperm::Errc::invalid_argument, "negative size");
  if (static_cast<std::size_t>(n) > bperm::kMaxSequenceSize) {
    throw bperm::Error(bperm::Errc::size_cap_exceeded, "n > " + std::to_string(bperm::kMaxSequenceSize));
  }
  return n;
}

bperm::Method to_method(bperm_method m) {
  switch (m) {
    case BPERM_METHOD_GLOBAL: return bperm::Method::global_patterns;
    case BPERM_METHOD_CLASSICAL: return bperm::Method::classical_patterns;
    case BPERM_METHOD_STRUCTURAL: return bperm::Method::structural;
  }
  throw bperm::Error(bperm::Errc::invalid_argument, "unknown method");
}

}  // namespace

extern "C" {

const char* bperm_last_error(void) { return last_error.c_str(); }

const char* bperm_status_name(bperm_status status) {
  switch (status) {
    case BPERM_OK: return "Ok";
    case BPERM_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  return bperm::errc_name(static_cast<bperm::Errc>(status));
}

void bperm_string_free(char* text) { std::free(text); }

bperm_status bperm_signed_parse(const char* text, bperm_signed** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new bperm_signed{bperm::parse_signed(text)};
  });
}

bperm_status bperm_signed_from_window(const int* window, size_t n, bperm_signed** out) {
  return guarded([&] {
    if (n > 0) require(window, "window");
    require(out, "out");
    *out = new bperm_signed{bperm::SignedPermutation::from(std::span<const int>(window, n))};
  });
}

void bperm_signed_free(bperm_signed* w) { delete w; }

size_t bperm_signed_size(const bperm_signed* w) { return w ? w->value.size() : 0; }

bperm_status bperm_signed_window(const bperm_signed* w, int* out, size_t capacity) {
  return guarded([&] {
    require(w, "handle");
    copy_out(w->value.window(), out, capacity);
  });
}

bperm_status bperm_signed_mirror(const bperm_signed* w, int* out, size_t capacity) {
  return guarded([&] {
    require(w, "handle");
    copy_out(bperm::mirror_word(w->value), out, capacity);
  });
}

bperm_status bperm_signed_iota(const bperm_signed* w, int* out, size_t capacity) {
  return guarded([&] {
    require(w, "handle");
    copy_out(bperm::iota(w->value).word(), out, capacity);
  });
}

bperm_status bperm_signed_to_string(const bperm_signed* w, char** out) {
  return guarded([&] {
    require(w, "handle");
    require(out, "out");
    *out = duplicate(bperm::to_string(w->value));
  });
}

size_t bperm_signed_length(const bperm_signed* w) { return w ? bperm::length(w->value) : 0; }

bperm_status bperm_signed_has_property(const bperm_signed* w, const char* property, int* out) {
  return guarded([&] {
    require(w, "handle");
    require(property, "property");
    require(out, "out");
    *out = bperm::has_property(w->value, property) ? 1 : 0;
  });
}

bperm_status bperm_signed_check_method(const bperm_signed* w, const char* property, bperm_method method, int* out) {
  return guarded([&] {
    require(w, "handle");
    require(property, "property");
    require(out, "out");
    const std::string name = property;
    const bperm::Method m = to_method(method);
    bool result = false;
    if (name == "vexillary") {
      result = bperm::is_vexillary(w->value, m);
    } else if (name == "boolean") {
      result = bperm::is_boolean(w->value, m);
    } else if (name == "free") {
      result = bperm::is_free(w->value, m);
    } else if (name == "smooth-bc") {
      result = bperm::is_smooth_bc(w->value, m);
    } else {
      throw bperm::Error(bperm::Errc::unsupported_method, "no method selection for '" + name + "'");
    }
    *out = result ? 1 : 0;
  });
}

bperm_status bperm_signed_global_contains(const bperm_signed* w, const char* pattern, int* out) {
  return guarded([&] {
    require(w, "handle");
    require(pattern, "pattern");
    require(out, "out");
    *out = bperm::global_contains(w->value, bperm::parse_permutation(pattern)) ? 1 : 0;
  });
}

bperm_status bperm_signed_classical_contains(const bperm_signed* w, const char* pattern, int* out) {
  return guarded([&] {
    require(w, "handle");
    require(pattern, "pattern");
    require(out, "out");
    *out = bperm::classical_contains(w->value, bperm::parse_signed(pattern)) ? 1 : 0;
  });
}

bperm_status bperm_signed_global_occurrences(const bperm_signed* w, const char* pattern, uint64_t* out) {
  return guarded([&] {
    require(w, "handle");
    require(pattern, "pattern");
    require(out, "out");
    *out = bperm::global_occurrences(w->value, bperm::parse_permutation(pattern));
  });
}

size_t bperm_strings_size(const bperm_strings* list) { return list ? list->items.size() : 0; }

const char* bperm_strings_at(const bperm_strings* list, size_t i) {
  if (list == nullptr || i >= list->items.size()) return nullptr;
  return list->items[i].c_str();
}

void bperm_strings_free(bperm_strings* list) { delete list; }

bperm_status bperm_basis(const char* patterns, bperm_strings** out) {
  return guarded([&] {
    require(patterns, "patterns");
    require(out, "out");
    auto list = std::make_unique<bperm_strings>();
    for (const auto& q : bperm::global_basis(bperm::parse_global_patterns(patterns)).patterns) {
      list->items.push_back(bperm::to_string(q));
    }
    *out = list.release();
  });
}

bperm_status bperm_list_property(const char* property, int n, bperm_strings** out) {
  return guarded([&] {
    require(property, "property");
    require(out, "out");
    const std::string name = property;
    const auto names = bperm::property_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw bperm::Error(bperm::Errc::invalid_argument, "unknown property '" + name + "'");
    }
    auto list = std::make_unique<bperm_strings>();
    bperm::AvoiderStream stream(static_cast<std::size_t>(checked_size(n)),
                                [&name](const bperm::SignedPermutation& w) { return bperm::has_property(w, name); });
    bperm::SignedPermutation w;
    while (stream.next(w)) list->items.push_back(bperm::to_string(w));
    *out = list.release();
  });
}

bperm_status bperm_list_avoiders(const char* patterns, bperm_mode mode, int n, bperm_strings** out) {
  return guarded([&] {
    require(patterns, "patterns");
    require(out, "out");
    const auto size = static_cast<std::size_t>(checked_size(n));
    auto list = std::make_unique<bperm_strings>();
    auto stream = mode == BPERM_MODE_GLOBAL ? bperm::gav(size, bperm::parse_global_patterns(patterns))
                                            : bperm::classical_avoiders(size, bperm::parse_signed_patterns(patterns));
    bperm::SignedPermutation w;
    while (stream.next(w)) list->items.push_back(bperm::to_string(w));
    *out = list.release();
  });
}

bperm_status bperm_occurrence_distribution(const char* pattern, int n, bperm_strings** out) {
  return guarded([&] {
    require(pattern, "pattern");
    require(out, "out");
    const bperm::Permutation p = bperm::parse_permutation(pattern);
    std::map<std::uint64_t, std::uint64_t> histogram;
    bperm::SignedPermutationEnumerator walker(static_cast<std::size_t>(checked_size(n)));
    bperm::SignedPermutation w;
    while (walker.next(w)) ++histogram[bperm::global_occurrences(w, p)];
    auto list = std::make_unique<bperm_strings>();
    for (const auto& [k, count] : histogram) list->items.push_back(std::to_string(k) + "," + std::to_string(count));
    *out = list.release();
  });
}

bperm_status bperm_syt_count(const char* shape, char** out) {
  return guarded([&] {
    require(shape, "shape");
    require(out, "out");
    *out = duplicate(bperm::syt_count(bperm::parse_partition(shape)).str());
  });
}

bperm_status bperm_domino_count(const char* shape, char** out) {
  return guarded([&] {
    require(shape, "shape");
    require(out, "out");
    *out = duplicate(bperm::domino_count(bperm::parse_partition(shape)).str());
  });
}

bperm_status bperm_domino_tableaux(const char* shape, bperm_strings** out) {
  return guarded([&] {
    require(shape, "shape");
    require(out, "out");
    auto list = std::make_unique<bperm_strings>();
    bperm::for_each_domino_tableau(bperm::parse_partition(shape), [&](const bperm::DominoTableau& t) {
      std::string text;
      for (const auto& row : t.render()) {
        if (!text.empty()) text += '\n';
        text += row;
      }
      list->items.push_back(std::move(text));
    });
    *out = list.release();
  });
}

bperm_status bperm_sequence(const char* patterns, bperm_mode mode, int n_min, int n_max, unsigned jobs,
                            int use_cache, bperm_table** out) {
  return guarded([&] {
    require(patterns, "patterns");
    require(out, "out");
    bperm::CountCache cache = use_cache ? bperm::CountCache::from_environment() : bperm::CountCache{};
    bperm::CountCache* cache_ptr = cache.enabled() ? &cache : nullptr;
    auto result = std::make_unique<bperm_table>();
    result->table = mode == BPERM_MODE_GLOBAL
                        ? bperm::sequence(bperm::parse_global_patterns(patterns), n_min, n_max, jobs, cache_ptr)
                        : bperm::sequence_classical(bperm::parse_signed_patterns(patterns), n_min, n_max, jobs,
                                                    cache_ptr);
    for (const auto& row : result->table.rows) result->counts.push_back(row.second.str());
    if (cache_ptr) cache.flush();
    *out = result.release();
  });
}

size_t bperm_table_size(const bperm_table* table) { return table ? table->table.rows.size() : 0; }

bperm_status bperm_table_row(const bperm_table* table, size_t i, int* n, const char** count) {
  return guarded([&] {
    require(table, "table");
    if (i >= table->table.rows.size()) throw bperm::Error(bperm::Errc::index_out_of_range, "row out of range");
    if (n) *n = table->table.rows[i].first;
    if (count) *count = table->counts[i].c_str();
  });
}

bperm_status bperm_table_csv(const bperm_table* table, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = duplicate(bperm::to_csv(table->table));
  });
}

bperm_status bperm_table_json(const bperm_table* table, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = duplicate(bperm::to_json(table->table));
  });
}

void bperm_table_free(bperm_table* table) { delete table; }

bperm_status bperm_list_checks(bperm_strings** out) {
  return guarded([&] {
    require(out, "out");
    auto list = std::make_unique<bperm_strings>();
    for (const auto& c : bperm::check_registry()) {
      list->items.push_back(c.id + "\t" + std::to_string(c.max_n) + "\t" +
                            (c.kind == bperm::CheckKind::theorem ? "theorem" : "conjecture") + "\t" + c.description);
    }
    *out = list.release();
  });
}

bperm_status bperm_verify(const char* check_id, int max_n, unsigned jobs, bperm_reports** out) {
  return guarded([&] {
    require(out, "out");
    bperm::RunOptions options;
    options.jobs = jobs == 0 ? 1 : jobs;
    auto result = std::make_unique<bperm_reports>();
    if (check_id != nullptr) {
      result->reports.push_back(bperm::run_check(check_id, max_n, options));
    } else {
      result->reports = bperm::run_all(max_n, options);
    }
    *out = result.release();
  });
}

size_t bperm_reports_size(const bperm_reports* reports) { return reports ? reports->reports.size() : 0; }

const char* bperm_reports_id(const bperm_reports* reports, size_t i) {
  if (reports == nullptr || i >= reports->reports.size()) return nullptr;
  return reports->reports[i].check.c_str();
}

const char* bperm_reports_status(const bperm_reports* reports, size_t i) {
  if (reports == nullptr || i >= reports->reports.size()) return nullptr;
  return bperm::status_name(reports->reports[i].status);
}

bperm_status bperm_reports_json(const bperm_reports* reports, char** out) {
  return guarded([&] {
    require(reports, "reports");
    require(out, "out");
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports->reports) doc.push_back(bperm::to_json(r));
    *out = duplicate(doc.dump(2) + "\n");
  });
}

bperm_status bperm_reports_text(const bperm_reports* reports, char** out) {
  return guarded([&] {
    require(reports, "reports");
    require(out, "out");
    std::ostringstream text;
    for (const auto& r : reports->reports) {
      text << r.check << ": " << bperm::status_name(r.status) << " (max_n " << r.max_n << ", " << r.rows.size()
           << " rows, " << r.millis << " ms)\n";
      for (const auto& row : r.rows) {
        if (!row.matches()) {
          text << "  n=" << row.n << " expected [" << row.expected << "] observed [" << row.observed << "]\n";
        }
      }
    }
    *out = duplicate(text.str());
  });
}

int bperm_reports_any_theorem_failed(const bperm_reports* reports) {
  return reports && bperm::any_theorem_failed(reports->reports) ? 1 : 0;
}

void bperm_reports_free(bperm_reports* reports) { delete reports; }

}  // extern "C"
