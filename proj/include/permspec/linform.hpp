#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permspec/rational.hpp"
#include "permspec/varid.hpp"

namespace permspec {

class Assignment;

// Sparse rational linear form c0 + sum c_v * v. Terms are kept sorted by
// VarId with no zero coefficients; this is the canonical form used for
// equality and printing. Every statistic value and every predicted
// eigenvalue in this project is such a form.
class LinForm {
 public:
  LinForm() = default;
  LinForm(const Rational& c) : constant_(c) {}   // NOLINT: implicit by design
  LinForm(int c) : constant_(c) {}               // NOLINT
  static LinForm variable(VarId v, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
  bool is_constant() const { return terms_.empty(); }
  const Rational& constant() const { return constant_; }
  Rational coeff(VarId v) const;
  const std::vector<std::pair<VarId, Rational>>& terms() const { return terms_; }

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const Rational& s);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rational& s) { return a *= s; }
  friend LinForm operator*(const Rational& s, LinForm a) { return a *= s; }
  friend LinForm operator-(const LinForm& a) { return a * Rational(-1); }

  friend bool operator==(const LinForm&, const LinForm&) = default;

  // Total order; used only for canonical sorting of form collections.
  friend bool operator<(const LinForm& a, const LinForm& b);

  void collect_vars(std::set<VarId>& out) const;

  Rational eval(const Assignment& a) const;

  // Replaces variable v by a linear form (coefficient distributes).
  LinForm substituted(VarId v, const LinForm& replacement) const;

  // Canonical string: terms in VarId order, then the constant.
  // e.g. "3*y[1,2] + 3*y[1,3] + 3*y[2,3] + 6*z", "-y[1,2] + 2*z", "0".
  std::string str() const;

 private:
  std::vector<std::pair<VarId, Rational>> terms_;
  Rational constant_;
};

}  // namespace permspec
