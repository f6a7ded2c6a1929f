#pragma once

#include <memory>

#include "qpr/cycpoly.hpp"

namespace qpr {

// Element of the quotient ring Q(zeta_N)[c] / (S) for a monic modulus S.
// Default-constructed values act as a context-free exact zero so the ring
// works as a matrix scalar.
class PolyMod {
 public:
  struct Ctx {
    CycPoly modulus;  // monic, degree >= 1
  };

  PolyMod() = default;
  PolyMod(std::shared_ptr<const Ctx> ctx, CycPoly value);

  static std::shared_ptr<const Ctx> make_context(const CycPoly& monic_modulus);
  static PolyMod constant(const std::shared_ptr<const Ctx>& ctx, const CycNum& a);
  static PolyMod variable(const std::shared_ptr<const Ctx>& ctx);

  bool is_zero() const;
  const CycPoly& value() const { return v_; }

  PolyMod operator-() const;
  friend PolyMod operator+(const PolyMod& a, const PolyMod& b);
  friend PolyMod operator-(const PolyMod& a, const PolyMod& b);
  friend PolyMod operator*(const PolyMod& a, const PolyMod& b);

  bool operator==(const PolyMod& o) const;
  bool operator!=(const PolyMod& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const Ctx> ctx_;  // null: exact zero
  CycPoly v_;

  static const std::shared_ptr<const Ctx>& merge_ctx(const PolyMod& a, const PolyMod& b);
};

}  // namespace qpr
