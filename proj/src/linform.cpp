#include "permspec/linform.hpp"

#include <algorithm>

#include "permspec/assignment.hpp"

namespace permspec {

LinForm LinForm::variable(VarId v, Rational coeff) {
  LinForm f;
  if (!coeff.is_zero()) f.terms_.emplace_back(v, std::move(coeff));
  return f;
}

Rational LinForm::coeff(VarId v) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), v,
      [](const auto& t, const VarId& key) { return t.first < key; });
  if (it != terms_.end() && it->first == v) return it->second;
  return Rational(0);
}

LinForm& LinForm::operator+=(const LinForm& o) {
  std::vector<std::pair<VarId, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  constant_ += o.constant_;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) { return *this += o * Rational(-1); }

LinForm& LinForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    constant_ = Rational(0);
    return *this;
  }
  for (auto& [v, c] : terms_) c *= s;
  constant_ *= s;
  return *this;
}

bool operator<(const LinForm& a, const LinForm& b) {
  if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& s, const auto& t) {
        if (s.first != t.first) return s.first < t.first;
        return s.second < t.second;
      });
}

void LinForm::collect_vars(std::set<VarId>& out) const {
  for (const auto& [v, c] : terms_) out.insert(v);
}

Rational LinForm::eval(const Assignment& a) const {
  Rational r = constant_;
  for (const auto& [v, c] : terms_) r += c * a.value_of(v);
  return r;
}

LinForm LinForm::substituted(VarId v, const LinForm& replacement) const {
  const Rational c = coeff(v);
  if (c.is_zero()) return *this;
  LinForm out = *this;
  out += LinForm::variable(v, -c);  // remove the term
  out += replacement * c;
  return out;
}

std::string LinForm::str() const {
  if (is_zero()) return "0";
  std::string s;
  auto append = [&s](const Rational& c, const std::string& body) {
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (body.empty()) {
      s += mag.str();
    } else if (mag == Rational(1)) {
      s += body;
    } else {
      s += mag.str() + "*" + body;
    }
  };
  for (const auto& [v, c] : terms_) append(c, v.name());
  if (!constant_.is_zero()) append(constant_, "");
  return s;
}

}  // namespace permspec
