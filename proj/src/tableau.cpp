#include "redword/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace redword {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 1; r < rows_.size(); ++r) {
    if (rows_[r].size() > rows_[r - 1].size()) throw std::invalid_argument("tableau rows must weakly shorten");
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] < 1) return false;
      if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_row_strict() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c - 1] >= rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_row_strict()) return false;
  std::vector<int> all;
  for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Tableau Tableau::transpose() const {
  std::vector<std::vector<int>> t(rows_.empty() ? 0 : rows_.front().size());
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) t[c].push_back(r[c]);
  }
  return Tableau(std::move(t));
}

std::vector<int> Tableau::row_reading_word() const {
  std::vector<int> w;
  for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

std::vector<int> Tableau::column_reading_word() const {
  std::vector<int> w;
  const std::size_t ncols = rows_.empty() ? 0 : rows_.front().size();
  for (std::size_t c = 0; c < ncols; ++c) {
    for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) {
      if (c < r->size()) w.push_back((*r)[c]);
    }
  }
  return w;
}

std::vector<int> Tableau::content(int max_entry) const {
  std::vector<int> out(max_entry, 0);
  for (const auto& r : rows_) {
    for (int v : r) {
      if (v >= 1 && v <= max_entry) ++out[v - 1];
    }
  }
  return out;
}

void Tableau::append(int row, int value) {
  if (row == static_cast<int>(rows_.size())) rows_.emplace_back();
  rows_[row].push_back(value);
}

std::string format_tableau(const Tableau& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(t.rows()[r][c]);
    }
    out += ']';
  }
  return out + "]";
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  int depth = 0;
  std::string number;
  auto flush = [&] {
    if (!number.empty()) {
      rows.back().push_back(std::stoi(number));
      number.clear();
    }
  };
  for (char c : text) {
    if (c == '[') {
      if (++depth == 2) rows.emplace_back();
      if (depth > 2) throw std::invalid_argument("malformed tableau '" + text + "'");
    } else if (c == ']') {
      if (depth == 2) flush();
      --depth;
    } else if (c == ',' || c == ' ') {
      if (depth == 2) flush();
    } else if (c >= '0' && c <= '9' && depth == 2) {
      number += c;
    } else {
      throw std::invalid_argument("malformed tableau '" + text + "'");
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + text + "'");
  return Tableau(std::move(rows));
}

Tableau yamanouchi_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lambda.length(); ++r) rows.emplace_back(lambda[r], r + 1);
  return Tableau(std::move(rows));
}

namespace {

// Row-major filling; `cells` lists (row, col) in that order.
template <class Accept>
void fill(std::vector<std::vector<int>>& rows, const std::vector<std::pair<int, int>>& cells, std::size_t k,
          int max_entry, bool strict_rows, Accept&& accept) {
  if (k == cells.size()) {
    accept(rows);
    return;
  }
  const auto [r, c] = cells[k];
  int low = 1;
  if (c > 0) low = std::max(low, rows[r][c - 1] + (strict_rows ? 1 : 0));
  if (r > 0) low = std::max(low, rows[r - 1][c] + 1);
  for (int v = low; v <= max_entry; ++v) {
    rows[r][c] = v;
    fill(rows, cells, k + 1, max_entry, strict_rows, accept);
  }
}

std::vector<std::pair<int, int>> cells_of(const Partition& lambda) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  return cells;
}

std::vector<std::vector<int>> blank(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lambda.length(); ++r) rows.emplace_back(lambda[r], 0);
  return rows;
}

struct Signature {
  std::vector<std::pair<int, int>> free_lower;  // unbracketed i, in reading order
  std::vector<std::pair<int, int>> free_upper;  // unbracketed i+1, in reading order
};

Signature signature(const Tableau& t, int i) {
  Signature sig;
  const auto& rows = t.rows();
  for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      const int v = rows[r][c];
      if (v == i + 1) {
        sig.free_upper.emplace_back(r, c);
      } else if (v == i) {
        if (!sig.free_upper.empty()) {
          sig.free_upper.pop_back();
        } else {
          sig.free_lower.emplace_back(r, c);
        }
      }
    }
  }
  return sig;
}

}  // namespace

std::vector<Tableau> generate_ssyt(const Partition& lambda, int max_entry) {
  std::vector<Tableau> out;
  auto rows = blank(lambda);
  fill(rows, cells_of(lambda), 0, max_entry, false, [&](const auto& filled) { out.emplace_back(filled); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  auto rows = blank(lambda);
  const int n = lambda.size();
  fill(rows, cells_of(lambda), 0, n, true, [&](const auto& filled) {
    Tableau t(filled);
    if (t.is_standard()) out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Tableau> tableau_crystal_f(const Tableau& t, int i) {
  if (i < 1) throw std::out_of_range("crystal index must be positive");
  const Signature sig = signature(t, i);
  if (sig.free_lower.empty()) return std::nullopt;
  Tableau out = t;
  const auto [r, c] = sig.free_lower.back();
  out.row(r)[c] = i + 1;
  return out;
}

std::optional<Tableau> tableau_crystal_e(const Tableau& t, int i) {
  if (i < 1) throw std::out_of_range("crystal index must be positive");
  const Signature sig = signature(t, i);
  if (sig.free_upper.empty()) return std::nullopt;
  Tableau out = t;
  const auto [r, c] = sig.free_upper.front();
  out.row(r)[c] = i;
  return out;
}

std::vector<int> tableau_weight(const Tableau& t, int n) { return t.content(n); }

SymFuncExpansion schur_polynomial(const Partition& lambda, int nvars) {
  SymFuncExpansion out(Basis::Monomial);
  for (const Tableau& t : generate_ssyt(lambda, nvars)) {
    const auto wt = t.content(nvars);
    if (is_partition_shaped(wt)) out.add(Partition(wt), 1);
  }
  return out;
}

Integer hook_length_count(const Partition& lambda) {
  const Partition conjugate = lambda.transpose();
  Integer numerator = 1;
  for (int k = 2; k <= lambda.size(); ++k) numerator *= k;
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conjugate[c] - r - 1) + 1;
  }
  return numerator / hooks;
}

namespace {

using KostkaMemo = std::map<std::pair<std::vector<int>, std::size_t>, Integer>;

// Semistandard fillings of `shape` using letters 1..k with content mu[0..k-1].
Integer kostka_recursive(const std::vector<int>& shape, const std::vector<int>& mu, std::size_t k, KostkaMemo& memo) {
  int total = 0;
  for (int p : shape) total += p;
  if (k == 0) return total == 0 ? 1 : 0;
  if (auto it = memo.find({shape, k}); it != memo.end()) return it->second;
  const int strip = mu[k - 1];
  Integer count = 0;
  // Remove a horizontal strip of size `strip` holding the letter k: row r can
  // shrink to any length >= the old length of row r+1.
  std::vector<int> inner = shape;
  auto choose = [&](auto&& self, std::size_t r, int left) -> void {
    if (r == shape.size()) {
      if (left == 0) count += kostka_recursive(inner, mu, k - 1, memo);
      return;
    }
    const int floor = r + 1 < shape.size() ? shape[r + 1] : 0;
    for (int removed = 0; removed <= std::min(left, shape[r] - floor); ++removed) {
      inner[r] = shape[r] - removed;
      self(self, r + 1, left - removed);
    }
    inner[r] = shape[r];
  };
  choose(choose, 0, strip);
  memo.emplace(std::make_pair(shape, k), count);
  return count;
}

}  // namespace

Integer kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  KostkaMemo memo;
  return kostka_recursive(lambda.parts(), mu.parts(), mu.parts().size(), memo);
}

}  // namespace redword
