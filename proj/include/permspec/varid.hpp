#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "permspec/errors.hpp"

namespace permspec {

// Statistic indeterminates. X(i) are descent weights x_i (i in [n-1]),
// Y(i,j) inversion weights y_{i,j} (1 <= i < j <= n), Z the fixed-point
// weight z, and ZI(i) the per-position weights z_i used only by the mfix
// oracle (they never appear in matrices). The ordering X < Y < Z < ZI
// is the canonical serialization order.
enum class VarKind : uint8_t { X = 0, Y = 1, Z = 2, ZI = 3 };

struct VarId {
  VarKind kind = VarKind::Z;
  uint8_t i = 0, j = 0;

  static VarId x(int i) {
    if (i < 1) throw UsageError("VarId: x index must be >= 1");
    return {VarKind::X, static_cast<uint8_t>(i), 0};
  }
  static VarId y(int i, int j) {
    if (i < 1 || j <= i) throw UsageError("VarId: y requires 1 <= i < j");
    return {VarKind::Y, static_cast<uint8_t>(i), static_cast<uint8_t>(j)};
  }
  static VarId z() { return {VarKind::Z, 0, 0}; }
  static VarId zi(int i) {
    if (i < 1) throw UsageError("VarId: z_i index must be >= 1");
    return {VarKind::ZI, static_cast<uint8_t>(i), 0};
  }

  std::string name() const {
    switch (kind) {
      case VarKind::X:
        return "x[" + std::to_string(i) + "]";
      case VarKind::Y:
        return "y[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case VarKind::Z:
        return "z";
      case VarKind::ZI:
        return "z[" + std::to_string(i) + "]";
    }
    return "?";
  }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

}  // namespace permspec
