#include "redword/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace redword {

std::string format_word(const Word& w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](Letter a) { return a > 9; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty() || compact == "e" || compact == "()") return {};
  const bool comma = text.find(',') != std::string::npos;
  const bool space = compact.size() != text.size();
  Word w;
  if (comma || space) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed word '" + text + "'");
      }
      w.push_back(std::stoi(token));
    }
    return w;
  }
  for (char c : compact) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed word '" + text + "'");
    }
    w.push_back(c - '0');
  }
  return w;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[rhs.images_[x] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x] - 1] = static_cast<int>(x) + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x) + 1) return false;
  }
  return true;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation out = *this;
  std::swap(out.images_[i - 1], out.images_[j - 1]);
  return out;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

std::string format_one_line(const Permutation& p) {
  std::string out = "[";
  for (int k = 1; k <= p.degree(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem CoxeterSystem::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("S_n needs n >= 1");
  return CoxeterSystem(CoxeterKind::Symmetric, n);
}

CoxeterSystem CoxeterSystem::hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube group needs n >= 1");
  return CoxeterSystem(CoxeterKind::Hypercube, n);
}

CoxeterSystem CoxeterSystem::dihedral(int m) {
  if (m < 2) throw std::invalid_argument("dihedral group I_2(m) needs m >= 2");
  return CoxeterSystem(CoxeterKind::Dihedral, m);
}

CoxeterSystem::CoxeterSystem(CoxeterKind kind, int parameter) : kind_(kind), parameter_(parameter) {
  switch (kind_) {
    case CoxeterKind::Symmetric:
      rank_ = parameter - 1;
      degree_ = parameter;
      for (int i = 1; i <= rank_; ++i) generators_.push_back(identity().swap_positions(i, i + 1));
      break;
    case CoxeterKind::Hypercube:
      rank_ = parameter;
      degree_ = 2 * parameter;
      for (int i = 1; i <= rank_; ++i) generators_.push_back(identity().swap_positions(2 * i - 1, 2 * i));
      break;
    case CoxeterKind::Dihedral: {
      rank_ = 2;
      degree_ = 2 * parameter;
      // Points 1..2m stand for residues 0..2m-1.
      std::vector<int> s1(degree_), s2(degree_);
      for (int x = 0; x < degree_; ++x) {
        s1[x] = ((degree_ - x) % degree_) + 1;
        s2[x] = ((2 - x + degree_) % degree_) + 1;
      }
      generators_ = {Permutation(s1), Permutation(s2)};
      auto table = std::make_shared<std::map<Permutation, int>>();
      std::deque<Permutation> queue{identity()};
      (*table)[identity()] = 0;
      while (!queue.empty()) {
        const Permutation g = queue.front();
        queue.pop_front();
        for (const auto& s : generators_) {
          const Permutation h = g * s;
          if (table->emplace(h, table->at(g) + 1).second) queue.push_back(h);
        }
      }
      length_table_ = std::move(table);
      break;
    }
  }
  longest_ = std::make_shared<const Permutation>(parabolic_longest(generators()));
}

std::string CoxeterSystem::name() const {
  switch (kind_) {
    case CoxeterKind::Symmetric: return "S" + std::to_string(parameter_);
    case CoxeterKind::Hypercube: return "Hypercube(" + std::to_string(parameter_) + ")";
    case CoxeterKind::Dihedral: return "Dihedral(" + std::to_string(parameter_) + ")";
  }
  return {};
}

std::vector<Letter> CoxeterSystem::generators() const {
  std::vector<Letter> out(rank_);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

Permutation CoxeterSystem::generator(Letter i) const {
  if (!is_generator(i)) {
    throw std::invalid_argument("generator " + std::to_string(i) + " not in " + name());
  }
  return generators_[i - 1];
}

bool CoxeterSystem::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  switch (kind_) {
    case CoxeterKind::Symmetric: return true;
    case CoxeterKind::Hypercube:
      for (int i = 1; i <= rank_; ++i) {
        const int a = g(2 * i - 1);
        if (!((a == 2 * i - 1 && g(2 * i) == 2 * i) || (a == 2 * i && g(2 * i) == 2 * i - 1))) return false;
      }
      return true;
    case CoxeterKind::Dihedral: return length_table_->count(g) > 0;
  }
  return false;
}

void CoxeterSystem::require(const Permutation& g) const {
  if (!contains(g)) {
    throw std::invalid_argument("element " + format_one_line(g) + " does not belong to " + name());
  }
}

Permutation CoxeterSystem::multiply(const Permutation& a, const Permutation& b) const {
  require(a);
  require(b);
  return a * b;
}

Permutation CoxeterSystem::right_multiply(const Permutation& g, Letter i) const {
  switch (kind_) {
    case CoxeterKind::Symmetric: return g.swap_positions(i, i + 1);
    case CoxeterKind::Hypercube: return g.swap_positions(2 * i - 1, 2 * i);
    case CoxeterKind::Dihedral: return g * generators_[i - 1];
  }
  return g;
}

Permutation CoxeterSystem::evaluate(std::span<const Letter> word) const {
  Permutation g = identity();
  for (Letter i : word) {
    if (!is_generator(i)) {
      throw std::invalid_argument("letter " + std::to_string(i) + " is not a generator of " + name());
    }
    g = right_multiply(g, i);
  }
  return g;
}

int CoxeterSystem::length(const Permutation& g) const {
  require(g);
  switch (kind_) {
    case CoxeterKind::Symmetric: return g.inversions();
    case CoxeterKind::Hypercube: {
      int count = 0;
      for (int i = 1; i <= rank_; ++i) count += g(2 * i - 1) != 2 * i - 1;
      return count;
    }
    case CoxeterKind::Dihedral: return length_table_->at(g);
  }
  return 0;
}

bool CoxeterSystem::is_reduced(std::span<const Letter> word) const {
  return length(evaluate(word)) == static_cast<int>(word.size());
}

std::vector<Letter> CoxeterSystem::right_descents(const Permutation& g) const {
  const int l = length(g);
  std::vector<Letter> out;
  for (Letter i = 1; i <= rank_; ++i) {
    if (length(right_multiply(g, i)) < l) out.push_back(i);
  }
  return out;
}

std::vector<Letter> CoxeterSystem::left_descents(const Permutation& g) const {
  return right_descents(g.inverse());
}

std::vector<Permutation> CoxeterSystem::weak_order_covers(const Permutation& g) const {
  const int l = length(g);
  std::vector<Permutation> out;
  for (Letter i = 1; i <= rank_; ++i) {
    Permutation v = generators_[i - 1] * g;
    if (length(v) == l - 1) out.push_back(std::move(v));
  }
  return out;
}

Permutation CoxeterSystem::parabolic_longest(std::span<const Letter> J) const {
  Permutation g = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (Letter j : J) {
      Permutation h = right_multiply(g, j);
      if (length(h) > length(g)) {
        g = std::move(h);
        grew = true;
      }
    }
  }
  return g;
}

namespace {

void collect_reduced_words(const CoxeterSystem& system, const Permutation& g,
                           std::map<Permutation, std::vector<Word>>& memo) {
  if (memo.count(g)) return;
  std::vector<Word> words;
  if (system.length(g) == 0) {
    words.push_back({});
  } else {
    for (Letter i : system.right_descents(g)) {
      const Permutation h = system.multiply(g, system.generator(i));
      collect_reduced_words(system, h, memo);
      for (const Word& prefix : memo.at(h)) {
        Word w = prefix;
        w.push_back(i);
        words.push_back(std::move(w));
      }
    }
  }
  memo.emplace(g, std::move(words));
}

}  // namespace

std::vector<Word> CoxeterSystem::reduced_words(const Permutation& g) const {
  require(g);
  std::map<Permutation, std::vector<Word>> memo;
  collect_reduced_words(*this, g, memo);
  std::vector<Word> words = std::move(memo.at(g));
  std::sort(words.begin(), words.end());
  return words;
}

std::size_t CoxeterSystem::count_reduced_words(const Permutation& g) const {
  require(g);
  std::map<Permutation, std::size_t> memo;
  auto count = [&](auto&& self, const Permutation& h) -> std::size_t {
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    std::size_t total = length(h) == 0 ? 1 : 0;
    for (Letter i : right_descents(h)) total += self(self, right_multiply(h, i));
    memo.emplace(h, total);
    return total;
  };
  return count(count, g);
}

Word CoxeterSystem::exchange(Letter i, std::span<const Letter> w) const {
  if (!is_generator(i)) {
    throw std::invalid_argument("letter " + std::to_string(i) + " is not a generator of " + name());
  }
  if (static_cast<int>(w.size()) != length(longest()) || evaluate(w) != longest()) {
    throw std::invalid_argument("exchange needs a reduced word of the longest element, got " +
                                format_word(Word(w.begin(), w.end())));
  }
  // The deletion index is the first letter whose multiplication drops the length of s_i w_1 ... w_j.
  Permutation prefix = generator(i);
  int prefix_length = 1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    prefix = right_multiply(prefix, w[j]);
    const int l = length(prefix);
    if (l < prefix_length + 1) {
      Word out;
      out.reserve(w.size());
      out.push_back(i);
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != j) out.push_back(w[k]);
      }
      return out;
    }
    prefix_length = l;
  }
  throw std::logic_error("exchange condition failed: no length drop found");
}

std::vector<Permutation> CoxeterSystem::elements() const {
  std::vector<Permutation> out;
  switch (kind_) {
    case CoxeterKind::Symmetric: {
      std::vector<int> v = identity().one_line();
      do {
        out.emplace_back(v);
      } while (std::next_permutation(v.begin(), v.end()));
      break;
    }
    case CoxeterKind::Hypercube:
      for (unsigned mask = 0; mask < (1u << rank_); ++mask) {
        Permutation g = identity();
        for (int i = 1; i <= rank_; ++i) {
          if (mask & (1u << (i - 1))) g = right_multiply(g, i);
        }
        out.push_back(std::move(g));
      }
      break;
    case CoxeterKind::Dihedral:
      for (const auto& [g, l] : *length_table_) out.push_back(g);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CoxeterSystem::describe(const Permutation& g) const {
  require(g);
  switch (kind_) {
    case CoxeterKind::Symmetric: return format_one_line(g);
    case CoxeterKind::Hypercube: {
      std::string out = "{";
      bool first = true;
      for (int i = 1; i <= rank_; ++i) {
        if (g(2 * i - 1) != 2 * i - 1) {
          if (!first) out += ',';
          out += std::to_string(i);
          first = false;
        }
      }
      return out + "}";
    }
    case CoxeterKind::Dihedral: {
      const auto words = reduced_words(g);
      return words.front().empty() ? "e" : format_word(words.front());
    }
  }
  return {};
}

}  // namespace redword
