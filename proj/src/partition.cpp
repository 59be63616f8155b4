#include "redword/partition.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace redword {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw std::invalid_argument("partition parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++t[c];
  }
  return Partition(std::move(t));
}

Partition Partition::staircase(int n) {
  std::vector<int> parts;
  for (int k = n - 1; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

bool is_partition_shaped(const std::vector<int>& weights) {
  for (std::size_t k = 1; k < weights.size(); ++k) {
    if (weights[k] > weights[k - 1]) return false;
  }
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w >= 0; });
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  const auto n = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t k = 0; k < n; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb) return false;
  }
  return true;
}

namespace {

void extend(int remaining, int max_part, int max_parts, std::vector<int>& current,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    extend(remaining - p, p, max_parts, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> current;
  extend(n, n, max_parts, current, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, INT_MAX); }

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (int k = 0; k < p.length(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(p[k]);
  }
  return out + "]";
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && c != ' ') s += c;
  }
  std::vector<int> parts;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed partition '" + text + "'");
    }
    parts.push_back(std::stoi(token));
  }
  return Partition(std::move(parts));
}

}  // namespace redword
