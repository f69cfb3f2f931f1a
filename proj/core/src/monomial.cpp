#include "nilzeta/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nilzeta {

std::string Variable::name() const {
  switch (kind) {
    case VarKind::P: return "p";
    case VarKind::T: return "t";
    case VarKind::Q: return "q";
    case VarKind::Z: return "z";
    case VarKind::X: return "X" + std::to_string(index);
    case VarKind::Y: return "Y" + std::to_string(index);
  }
  return "?";
}

std::optional<Variable> Variable::parse(std::string_view name) {
  if (name == "p") return p();
  if (name == "t") return t();
  if (name == "q") return q();
  if (name == "z") return z();
  if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y')) {
    int idx = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return name[0] == 'X' ? X(idx) : Y(idx);
  }
  return std::nullopt;
}

Monomial::Monomial(Variable v, int exponent) {
  if (exponent != 0) entries_.emplace_back(v, exponent);
}

Monomial::Monomial(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries) *this *= Monomial(v, e);
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Variable key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  out.entries_ = entries_;
  for (auto& entry : out.entries_) entry.second *= e;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.entries_.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) merged.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : entries_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  // First variable (in order) where the dense exponent vectors differ decides.
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      return ia->second <=> 0;
    }
    if (ia == a.entries_.end() || ib->first < ia->first) {
      return 0 <=> ib->second;
    }
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

}  // namespace nilzeta
