#include "redword/factorization.hpp"

#include "redword/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace redword {

class FactorizationCrystalAccess {
 public:
  static DecreasingFactorization make(std::vector<std::vector<Letter>> factors, const Permutation& target) {
    DecreasingFactorization f;
    f.factors_ = std::move(factors);
    f.target_ = target;
    return f;
  }
  static std::vector<std::vector<Letter>>& factors(DecreasingFactorization& f) { return f.factors_; }
};

namespace {

void normalize_factor(std::vector<Letter>& factor) {
  std::sort(factor.begin(), factor.end(), std::greater<>());
  if (std::adjacent_find(factor.begin(), factor.end()) != factor.end()) {
    throw std::invalid_argument("a decreasing factor cannot repeat a letter");
  }
}

bool contains(const std::vector<Letter>& decreasing, Letter a) {
  return std::binary_search(decreasing.begin(), decreasing.end(), a, std::greater<>());
}

void insert_letter(std::vector<Letter>& decreasing, Letter a) {
  decreasing.insert(std::lower_bound(decreasing.begin(), decreasing.end(), a, std::greater<>()), a);
}

void erase_letter(std::vector<Letter>& decreasing, Letter a) {
  decreasing.erase(std::lower_bound(decreasing.begin(), decreasing.end(), a, std::greater<>()));
}

void require_index(const DecreasingFactorization& f, int i) {
  if (i < 1 || i >= f.factor_count()) {
    throw std::out_of_range("crystal index " + std::to_string(i) + " outside 1.." +
                            std::to_string(f.factor_count() - 1));
  }
}

}  // namespace

DecreasingFactorization::DecreasingFactorization(const CoxeterSystem& system, std::vector<std::vector<Letter>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a factorization needs at least one factor");
  for (auto& factor : factors_) normalize_factor(factor);
  const Word w = word();
  target_ = system.evaluate(w);
  if (system.length(target_) != static_cast<int>(w.size())) {
    throw std::invalid_argument("factor lengths do not add up to the length of the product");
  }
}

DecreasingFactorization DecreasingFactorization::from_display(const CoxeterSystem& system,
                                                              std::vector<std::vector<Letter>> factors) {
  std::reverse(factors.begin(), factors.end());
  return DecreasingFactorization(system, std::move(factors));
}

DecreasingFactorization DecreasingFactorization::singletons(const CoxeterSystem& system, const Word& reduced) {
  std::vector<std::vector<Letter>> factors;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) factors.push_back({*it});
  if (factors.empty()) factors.emplace_back();
  return DecreasingFactorization(system, std::move(factors));
}

std::vector<int> DecreasingFactorization::weight() const {
  std::vector<int> wt;
  for (const auto& factor : factors_) wt.push_back(static_cast<int>(factor.size()));
  return wt;
}

Word DecreasingFactorization::word() const {
  Word w;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string format_factorization(const DecreasingFactorization& f) {
  std::string out;
  for (int k = f.factor_count(); k >= 1; --k) out += "(" + format_word(f.factor(k)) + ")";
  return out;
}

std::string format_factorization_tuple(const DecreasingFactorization& f) {
  std::string out = "(";
  for (int k = f.factor_count(); k >= 1; --k) {
    if (k != f.factor_count()) out += ", ";
    if (f.factor(k).empty()) {
      out += "1";
    } else {
      for (Letter a : f.factor(k)) out += "s" + std::to_string(a);
    }
  }
  return out + ")";
}

namespace {

std::vector<Letter> parse_s_product(const std::string& token, const std::string& whole) {
  std::vector<Letter> out;
  std::string t;
  for (char c : token) {
    if (c != ' ' && c != '*') t += c;
  }
  if (t.empty() || t == "1") return out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != 's') throw std::invalid_argument("malformed factorization '" + whole + "'");
    std::size_t end = pos + 1;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    if (end == pos + 1) throw std::invalid_argument("malformed factorization '" + whole + "'");
    out.push_back(std::stoi(t.substr(pos + 1, end - pos - 1)));
    pos = end;
  }
  return out;
}

}  // namespace

DecreasingFactorization parse_factorization(const CoxeterSystem& system, const std::string& text) {
  std::vector<std::string> groups;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') {
      if (depth++ > 0) throw std::invalid_argument("nested parentheses in '" + text + "'");
      current.clear();
    } else if (c == ')') {
      if (--depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
      groups.push_back(current);
    } else if (depth == 1) {
      current += c;
    } else if (c != ' ') {
      throw std::invalid_argument("text outside parentheses in '" + text + "'");
    }
  }
  if (depth != 0 || groups.empty()) throw std::invalid_argument("malformed factorization '" + text + "'");

  std::vector<std::vector<Letter>> display;
  const bool s_notation = text.find('s') != std::string::npos;
  if (s_notation && groups.size() == 1 && groups[0].find(',') != std::string::npos) {
    std::istringstream in(groups[0]);
    std::string item;
    while (std::getline(in, item, ',')) display.push_back(parse_s_product(item, text));
  } else if (s_notation) {
    for (const auto& g : groups) display.push_back(parse_s_product(g, text));
  } else {
    for (const auto& g : groups) display.push_back(parse_word(g));
  }
  return DecreasingFactorization::from_display(system, std::move(display));
}

std::vector<DecreasingFactorization> decreasing_factorizations(const CoxeterSystem& system, const Permutation& w,
                                                               int factors,
                                                               const std::optional<std::vector<int>>& weight) {
  if (system.kind() != CoxeterKind::Symmetric) {
    throw std::invalid_argument("decreasing factorizations are defined for symmetric groups");
  }
  if (factors < 1) throw std::invalid_argument("need at least one factor");
  if (weight && static_cast<int>(weight->size()) != factors) {
    throw std::invalid_argument("weight must have one entry per factor");
  }
  std::vector<DecreasingFactorization> out;
  // Letters are peeled off the right end of the remaining element: factor 1
  // first, and within a factor in increasing order (its rightmost letter is its smallest).
  std::vector<std::vector<Letter>> built(factors);
  auto capacity_after = [&](int k) {
    int cap = 0;
    for (int j = k; j < factors; ++j) cap += weight ? (*weight)[j] : system.rank();
    return cap;
  };
  auto recurse = [&](auto&& self, const Permutation& remaining, int remaining_length, int k) -> void {
    auto& factor = built[k];
    const int size = static_cast<int>(factor.size());
    const bool can_close = !weight || size == (*weight)[k];
    if (can_close) {
      if (k + 1 == factors) {
        if (remaining_length == 0) {
          auto factors_copy = built;
          for (auto& f : factors_copy) std::reverse(f.begin(), f.end());
          out.push_back(FactorizationCrystalAccess::make(std::move(factors_copy), w));
        }
      } else if (remaining_length <= capacity_after(k + 1)) {
        self(self, remaining, remaining_length, k + 1);
      }
    }
    if (weight && size >= (*weight)[k]) return;
    const Letter last = factor.empty() ? 0 : factor.back();
    for (Letter a : system.right_descents(remaining)) {
      if (a <= last) continue;
      factor.push_back(a);
      self(self, remaining.swap_positions(a, a + 1), remaining_length - 1, k);
      factor.pop_back();
    }
  };
  recurse(recurse, w, system.length(w), 0);
  std::sort(out.begin(), out.end());
  return out;
}

Pairing pairing(const DecreasingFactorization& f, int i) {
  require_index(f, i);
  const auto& upper = f.factor(i + 1);  // decreasing
  const auto& lower = f.factor(i);
  std::vector<bool> taken(lower.size(), false);
  Pairing p;
  for (Letter b : upper) {
    // smallest unpaired a > b; lower is decreasing so scan from the back
    std::optional<std::size_t> match;
    for (std::size_t k = lower.size(); k-- > 0;) {
      if (lower[k] > b && !taken[k]) {
        match = k;
        break;
      }
    }
    if (match) {
      taken[*match] = true;
      p.pairs.emplace_back(b, lower[*match]);
    } else {
      p.left.push_back(b);
    }
  }
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (!taken[k]) p.right.push_back(lower[k]);
  }
  std::sort(p.left.begin(), p.left.end());
  std::sort(p.right.begin(), p.right.end());
  return p;
}

std::optional<DecreasingFactorization> crystal_e(const DecreasingFactorization& f, int i) {
  const Pairing p = pairing(f, i);
  if (p.left.empty()) return std::nullopt;
  const Letter b = p.left.front();
  const auto& upper = f.factor(i + 1);
  int t = 0;
  while (contains(upper, b - t - 1)) ++t;
  DecreasingFactorization out = f;
  auto& factors = FactorizationCrystalAccess::factors(out);
  erase_letter(factors[i], b);
  insert_letter(factors[i - 1], b - t);
  return out;
}

std::optional<DecreasingFactorization> crystal_f(const DecreasingFactorization& f, int i) {
  const Pairing p = pairing(f, i);
  if (p.right.empty()) return std::nullopt;
  const Letter a = p.right.back();
  const auto& lower = f.factor(i);
  int s = 0;
  while (contains(lower, a + s + 1)) ++s;
  DecreasingFactorization out = f;
  auto& factors = FactorizationCrystalAccess::factors(out);
  erase_letter(factors[i - 1], a);
  insert_letter(factors[i], a + s);
  return out;
}

int crystal_epsilon(const DecreasingFactorization& f, int i) {
  return crystal_epsilon<DecreasingFactorization>(f, i, factorization_e_op());
}

int crystal_phi(const DecreasingFactorization& f, int i) {
  return crystal_phi<DecreasingFactorization>(f, i, factorization_f_op());
}

bool is_highest_weight(const DecreasingFactorization& f) {
  for (int i = 1; i < f.factor_count(); ++i) {
    if (crystal_e(f, i)) return false;
  }
  return true;
}

CrystalOp<DecreasingFactorization> factorization_e_op() {
  return [](const DecreasingFactorization& f, int i) { return crystal_e(f, i); };
}

CrystalOp<DecreasingFactorization> factorization_f_op() {
  return [](const DecreasingFactorization& f, int i) { return crystal_f(f, i); };
}

FactorizationCrystal build_crystal(const CoxeterSystem& system, const Permutation& w, int factors) {
  return make_crystal_graph<DecreasingFactorization>(decreasing_factorizations(system, w, factors), factors - 1,
                                                     factorization_e_op(), factorization_f_op());
}

int default_factor_count(const CoxeterSystem& system, const Permutation& w) {
  return std::max(1, system.length(w));
}

std::vector<HighestWeight> highest_weights(const CoxeterSystem& system, const Permutation& w, int factors) {
  if (factors == 0) factors = default_factor_count(system, w);
  const int l = system.length(w);
  std::vector<HighestWeight> out;
  for (const Partition& lambda : partitions_of(l, factors)) {
    std::vector<int> wt(factors, 0);
    for (int k = 0; k < lambda.length(); ++k) wt[k] = lambda[k];
    for (auto& f : decreasing_factorizations(system, w, factors, wt)) {
      if (is_highest_weight(f)) out.push_back({std::move(f), wt});
    }
  }
  std::sort(out.begin(), out.end(), [](const HighestWeight& a, const HighestWeight& b) {
    return std::tie(a.weight, a.element) > std::tie(b.weight, b.element);
  });
  return out;
}

}  // namespace redword
