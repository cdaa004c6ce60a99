#include "boostlab/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "boostlab/errors.hpp"
#include "boostlab/prng.hpp"

namespace boostlab {
namespace {

// RFC-4180-style reader: quoted fields may contain the delimiter, doubled
// quotes and embedded newlines. Accepts both \n and \r\n endings.
std::vector<std::vector<std::string>> read_csv_rows(std::istream& in, char delimiter) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool in_quotes = false;
  bool cell_started = false;
  char c;

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
  };

  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          cell.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    if (c == '"' && !cell_started) {
      in_quotes = true;
      cell_started = true;
    } else if (c == delimiter) {
      end_cell();
      cell_started = false;
    } else if (c == '\n') {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      end_row();
    } else {
      cell.push_back(c);
      cell_started = true;
    }
  }
  if (in_quotes) throw DataError("csv: unterminated quoted field");
  if (!cell.empty() || !row.empty()) end_row();
  // Blank lines (a lone empty cell) carry no record.
  std::erase_if(rows, [](const std::vector<std::string>& r) {
    return r.size() == 1 && r[0].empty();
  });
  return rows;
}

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "NA" || cell == "?";
}

// Full-cell parse to a finite double; "inf"/"nan" style tokens do not count
// as numeric values.
bool parse_finite(const std::string& cell, double& out) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') return false;
  if (!std::isfinite(v)) return false;
  out = v;
  return true;
}

double impute_numeric_value(std::vector<double> present, NumericImpute mode) {
  if (mode == NumericImpute::Mean) {
    double sum = 0.0;
    for (double v : present) sum += v;
    return sum / static_cast<double>(present.size());
  }
  // Median: average of the two middle order statistics for even counts.
  std::sort(present.begin(), present.end());
  const std::size_t n = present.size();
  if (n % 2 == 1) return present[n / 2];
  return 0.5 * (present[n / 2 - 1] + present[n / 2]);
}

std::size_t resolve_label_column(const std::vector<std::string>& header,
                                 const ColumnRef& ref) {
  if (std::holds_alternative<std::size_t>(ref)) {
    const std::size_t idx = std::get<std::size_t>(ref);
    if (idx >= header.size())
      throw DataError("label column index " + std::to_string(idx) +
                      " out of range for " + std::to_string(header.size()) + " columns");
    return idx;
  }
  const std::string& name = std::get<std::string>(ref);
  std::size_t found = header.size();
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] == name) {
      if (found != header.size())
        throw DataError("label column name '" + name + "' is ambiguous");
      found = j;
    }
  }
  if (found == header.size())
    throw DataError("label column '" + name + "' not found in header");
  return found;
}

Dataset subset(const Dataset& data, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.feature_names = data.feature_names;
  out.class_names = data.class_names;
  out.n_features = data.n_features;
  out.n_classes = data.n_classes;
  out.n_rows = indices.size();
  out.features.reserve(indices.size() * data.n_features);
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) {
    const auto r = data.row(i);
    out.features.insert(out.features.end(), r.begin(), r.end());
    out.labels.push_back(data.labels[i]);
  }
  return out;
}

}  // namespace

void Dataset::validate() const {
  if (n_rows == 0 || n_features == 0) throw DataError("dataset: empty matrix");
  if (n_classes < 2) throw DataError("dataset: fewer than two classes");
  if (features.size() != n_rows * n_features || labels.size() != n_rows)
    throw DataError("dataset: inconsistent sizes");
  if (class_names.size() != static_cast<std::size_t>(n_classes))
    throw DataError("dataset: class name count does not match n_classes");
  if (feature_names.size() != n_features)
    throw DataError("dataset: feature name count does not match n_features");
  for (double v : features)
    if (!std::isfinite(v)) throw DataError("dataset: non-finite feature value");
  for (int y : labels)
    if (y < 0 || y >= n_classes) throw DataError("dataset: label out of range");
}

Dataset load_csv(const std::filesystem::path& path, const PreprocessConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());

  auto rows = read_csv_rows(in, config.delimiter);
  if (rows.empty()) throw DataError("csv: no header row in " + path.string());
  const std::vector<std::string> header = std::move(rows.front());
  rows.erase(rows.begin());
  if (rows.empty()) throw DataError("csv: no data rows in " + path.string());

  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != header.size())
      throw DataError("csv: row " + std::to_string(i + 2) + " has " +
                      std::to_string(rows[i].size()) + " cells, expected " +
                      std::to_string(header.size()));

  const std::size_t label_col = resolve_label_column(header, config.label_column);

  // Duplicates are detected on the raw string cells, before any imputation,
  // so imputed values cannot manufacture new duplicates.
  if (config.drop_duplicates) {
    std::unordered_set<std::string> seen;
    std::vector<std::vector<std::string>> unique_rows;
    unique_rows.reserve(rows.size());
    for (auto& r : rows) {
      std::string key;
      for (const auto& cell : r) {
        key += cell;
        key.push_back('\x1f');
      }
      if (seen.insert(std::move(key)).second) unique_rows.push_back(std::move(r));
    }
    rows = std::move(unique_rows);
  }

  const std::size_t n = rows.size();
  const std::size_t d = header.size() - 1;
  if (d == 0) throw DataError("csv: no feature columns besides the label");

  Dataset out;
  out.n_rows = n;
  out.n_features = d;

  // Labels: lexicographic encoding over the distinct strings.
  std::map<std::string, int> label_codes;
  for (const auto& r : rows) {
    if (is_missing(r[label_col]))
      throw DataError("csv: missing label value");
    label_codes.emplace(r[label_col], 0);
  }
  if (label_codes.size() < 2)
    throw DataError("csv: need at least two distinct label values, got " +
                    std::to_string(label_codes.size()));
  {
    int code = 0;
    for (auto& [name, idx] : label_codes) {
      idx = code++;
      out.class_names.push_back(name);
    }
  }
  out.n_classes = static_cast<int>(label_codes.size());
  out.labels.reserve(n);
  for (const auto& r : rows) out.labels.push_back(label_codes.at(r[label_col]));

  out.features.assign(n * d, 0.0);
  for (std::size_t j = 0, col = 0; col < header.size(); ++col) {
    if (col == label_col) continue;
    out.feature_names.push_back(header[col]);

    bool numeric = true;
    std::vector<double> present;
    present.reserve(n);
    for (const auto& r : rows) {
      if (is_missing(r[col])) continue;
      double v;
      if (!parse_finite(r[col], v)) {
        numeric = false;
        break;
      }
      present.push_back(v);
    }

    if (numeric) {
      if (present.empty())
        throw DataError("csv: column '" + header[col] + "' has no usable values");
      const double fill = impute_numeric_value(present, config.impute_numeric);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& cell = rows[i][col];
        double v = fill;
        if (!is_missing(cell)) parse_finite(cell, v);
        out.features[i * d + j] = v;
      }
    } else {
      // Categorical: encode by first appearance, impute the mode (ties go
      // to the earliest-seen value).
      std::unordered_map<std::string, int> codes;
      std::vector<std::size_t> counts;
      for (const auto& r : rows) {
        if (is_missing(r[col])) continue;
        auto [it, inserted] = codes.emplace(r[col], static_cast<int>(codes.size()));
        if (inserted) counts.push_back(0);
        ++counts[static_cast<std::size_t>(it->second)];
      }
      if (codes.empty())
        throw DataError("csv: column '" + header[col] + "' has no usable values");
      int mode_code = 0;
      for (std::size_t k = 1; k < counts.size(); ++k)
        if (counts[k] > counts[static_cast<std::size_t>(mode_code)])
          mode_code = static_cast<int>(k);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& cell = rows[i][col];
        out.features[i * d + j] =
            is_missing(cell) ? static_cast<double>(mode_code)
                             : static_cast<double>(codes.at(cell));
      }
    }
    ++j;
  }

  out.validate();
  return out;
}

TrainTestSplit train_test_split(const Dataset& data, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw ConfigError("test_fraction must lie in (0, 1)");
  const std::size_t n = data.n_rows;
  if (n < 2) throw DataError("train_test_split: need at least two rows");

  const auto n_test = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * spec.test_fraction));
  if (n_test == 0 || n_test >= n)
    throw ConfigError("test_fraction " + std::to_string(spec.test_fraction) +
                      " yields an empty train or test part for N = " + std::to_string(n));

  SplitMix64 rng(spec.seed);
  std::vector<std::size_t> test_idx;

  if (!spec.stratified) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    deterministic_shuffle(order, rng);
    test_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
  } else {
    std::vector<std::vector<std::size_t>> by_class(
        static_cast<std::size_t>(data.n_classes));
    for (std::size_t i = 0; i < n; ++i)
      by_class[static_cast<std::size_t>(data.labels[i])].push_back(i);
    for (const auto& members : by_class)
      if (members.size() < 2)
        throw DataError("stratified split requires every class to have at least 2 members");

    // Largest-remainder allocation of the n_test slots across classes;
    // remainder ties go to the lower class index.
    const std::size_t k = by_class.size();
    std::vector<std::size_t> take(k);
    std::vector<std::pair<double, std::size_t>> remainders(k);
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const double exact = static_cast<double>(by_class[c].size()) * spec.test_fraction;
      take[c] = static_cast<std::size_t>(std::floor(exact));
      remainders[c] = {exact - std::floor(exact), c};
      assigned += take[c];
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (std::size_t r = 0; assigned < n_test; ++r, ++assigned) ++take[remainders[r % k].second];
    while (assigned > n_test) {
      // Over-allocation can only come from the floor sum already exceeding
      // the target; trim from the highest class index downward.
      for (std::size_t c = k; c-- > 0 && assigned > n_test;)
        if (take[c] > 0) {
          --take[c];
          --assigned;
        }
    }

    for (std::size_t c = 0; c < k; ++c) {
      auto members = by_class[c];
      deterministic_shuffle(members, rng);
      if (take[c] > members.size()) take[c] = members.size();
      test_idx.insert(test_idx.end(), members.begin(),
                      members.begin() + static_cast<std::ptrdiff_t>(take[c]));
    }
  }

  std::sort(test_idx.begin(), test_idx.end());
  std::vector<char> in_test(n, 0);
  for (std::size_t i : test_idx) in_test[i] = 1;
  std::vector<std::size_t> train_idx;
  train_idx.reserve(n - test_idx.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!in_test[i]) train_idx.push_back(i);

  return {subset(data, train_idx), subset(data, test_idx)};
}

}  // namespace boostlab
