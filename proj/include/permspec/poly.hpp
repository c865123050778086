#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "permspec/linform.hpp"
#include "permspec/rational.hpp"
#include "permspec/varid.hpp"

namespace permspec {

// Ordered list of the variables active at the current degree n. Monomial
// exponent vectors are fixed-length over this list. Registries are built
// per degree (or per variable set) and never shared across different n.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<VarId> vars);

  // x_1..x_{n-1}, y_{i,j} for i<j, z  (the matrix-entry universe).
  static std::shared_ptr<const VarRegistry> standard(int n);
  static std::shared_ptr<const VarRegistry> of(const std::set<VarId>& vars);

  size_t size() const { return vars_.size(); }
  VarId var(size_t slot) const { return vars_[slot]; }
  size_t slot_of(VarId v) const;
  bool contains(VarId v) const;

  friend bool operator==(const VarRegistry&, const VarRegistry&) = default;

 private:
  std::vector<VarId> vars_;  // sorted
};

using Monomial = std::vector<uint8_t>;  // exponent per registry slot

// Sparse multivariate polynomial with rational coefficients over a fixed
// registry. No zero coefficients stored; the map's lexicographic key order
// is the canonical term order.
class Poly {
 public:
  Poly() = default;  // zero polynomial, registry adopted on first use
  explicit Poly(std::shared_ptr<const VarRegistry> reg) : reg_(std::move(reg)) {}

  static Poly constant(Rational c, std::shared_ptr<const VarRegistry> reg);
  static Poly variable(VarId v, std::shared_ptr<const VarRegistry> reg);
  static Poly from_linform(const LinForm& f,
                           std::shared_ptr<const VarRegistry> reg);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  const std::shared_ptr<const VarRegistry>& registry() const { return reg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly&, const Poly&);

  Rational eval(const Assignment& a) const;

  // Monomials printed in graded lexicographic descending order,
  // e.g. "16*z^2", "y[1,2]*z - 3".
  std::string str() const;

 private:
  void check_same_registry(const Poly& o) const;
  std::shared_ptr<const VarRegistry> reg_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace permspec
