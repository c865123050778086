#include "permspec/poly.hpp"

#include <algorithm>
#include <numeric>

#include "permspec/assignment.hpp"
#include "permspec/errors.hpp"

namespace permspec {

VarRegistry::VarRegistry(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw UsageError("VarRegistry: duplicate variable");
}

std::shared_ptr<const VarRegistry> VarRegistry::standard(int n) {
  std::vector<VarId> vars;
  for (int i = 1; i <= n - 1; ++i) vars.push_back(VarId::x(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::y(i, j));
  vars.push_back(VarId::z());
  return std::make_shared<const VarRegistry>(std::move(vars));
}

std::shared_ptr<const VarRegistry> VarRegistry::of(const std::set<VarId>& vars) {
  return std::make_shared<const VarRegistry>(
      std::vector<VarId>(vars.begin(), vars.end()));
}

size_t VarRegistry::slot_of(VarId v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v)
    throw UsageError("VarRegistry: variable " + v.name() + " not registered");
  return static_cast<size_t>(it - vars_.begin());
}

bool VarRegistry::contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

Poly Poly::constant(Rational c, std::shared_ptr<const VarRegistry> reg) {
  Poly p(std::move(reg));
  if (!c.is_zero()) p.terms_[Monomial(p.reg_->size(), 0)] = std::move(c);
  return p;
}

Poly Poly::variable(VarId v, std::shared_ptr<const VarRegistry> reg) {
  Poly p(std::move(reg));
  Monomial m(p.reg_->size(), 0);
  m[p.reg_->slot_of(v)] = 1;
  p.terms_[std::move(m)] = Rational(1);
  return p;
}

Poly Poly::from_linform(const LinForm& f,
                        std::shared_ptr<const VarRegistry> reg) {
  Poly p(std::move(reg));
  if (!f.constant().is_zero())
    p.terms_[Monomial(p.reg_->size(), 0)] = f.constant();
  for (const auto& [v, c] : f.terms()) {
    Monomial m(p.reg_->size(), 0);
    m[p.reg_->slot_of(v)] = 1;
    p.terms_[std::move(m)] = c;
  }
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_same_registry(const Poly& o) const {
  if (!reg_ || !o.reg_) return;  // zero polynomial matches any registry
  if (reg_ != o.reg_ && !(*reg_ == *o.reg_))
    throw UsageError("Poly: mixed variable registries");
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_registry(o);
  if (!reg_) reg_ = o.reg_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_registry(o);
  if (!reg_) reg_ = o.reg_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_registry(b);
  Poly r(a.reg_ ? a.reg_ : b.reg_);
  if (a.is_zero() || b.is_zero()) return r;
  Monomial m(a.reg_->size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t s = 0; s < m.size(); ++s)
        m[s] = static_cast<uint8_t>(ma[s] + mb[s]);
      auto [it, inserted] = r.terms_.try_emplace(m, Rational(0));
      it->second += ca * cb;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  a.check_same_registry(b);
  return a.terms_ == b.terms_;
}

Rational Poly::eval(const Assignment& a) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t s = 0; s < m.size(); ++s)
      for (int e = 0; e < m[s]; ++e) t *= a.value_of(reg_->var(s));
    total += t;
  }
  return total;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
  };
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    const int da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string s;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string body;
    for (size_t slot = 0; slot < m.size(); ++slot) {
      if (m[slot] == 0) continue;
      if (!body.empty()) body += "*";
      body += reg_->var(slot).name();
      if (m[slot] > 1) body += "^" + std::to_string(m[slot]);
    }
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (body.empty())
      s += mag.str();
    else if (mag == Rational(1))
      s += body;
    else
      s += mag.str() + "*" + body;
  }
  return s;
}

}  // namespace permspec
