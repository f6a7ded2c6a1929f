#include "qpr/polymod.hpp"

#include <stdexcept>

namespace qpr {

PolyMod::PolyMod(std::shared_ptr<const Ctx> ctx, CycPoly value) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("PolyMod: null context");
  CycPoly q, r;
  CycPoly::divmod(value, ctx_->modulus, q, r);
  v_ = std::move(r);
}

std::shared_ptr<const PolyMod::Ctx> PolyMod::make_context(const CycPoly& monic_modulus) {
  if (monic_modulus.degree() < 1)
    throw std::invalid_argument("PolyMod: modulus must have degree >= 1");
  auto ctx = std::make_shared<Ctx>();
  ctx->modulus = monic_modulus.monic();
  return ctx;
}

PolyMod PolyMod::constant(const std::shared_ptr<const Ctx>& ctx, const CycNum& a) {
  return PolyMod(ctx, CycPoly::constant(a));
}

PolyMod PolyMod::variable(const std::shared_ptr<const Ctx>& ctx) {
  return PolyMod(ctx, CycPoly::variable());
}

bool PolyMod::is_zero() const { return !ctx_ || v_.is_zero(); }

const std::shared_ptr<const PolyMod::Ctx>& PolyMod::merge_ctx(const PolyMod& a, const PolyMod& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && !(a.ctx_->modulus == b.ctx_->modulus))
    throw std::invalid_argument("PolyMod: mixed moduli");
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

PolyMod PolyMod::operator-() const {
  PolyMod out = *this;
  out.v_ = -out.v_;
  return out;
}

PolyMod operator+(const PolyMod& a, const PolyMod& b) {
  const auto& ctx = PolyMod::merge_ctx(a, b);
  if (!ctx) return PolyMod();
  return PolyMod(ctx, a.v_ + b.v_);
}

PolyMod operator-(const PolyMod& a, const PolyMod& b) { return a + (-b); }

PolyMod operator*(const PolyMod& a, const PolyMod& b) {
  const auto& ctx = PolyMod::merge_ctx(a, b);
  if (!ctx) return PolyMod();
  if (!a.ctx_ || !b.ctx_) return PolyMod();  // context-free zero
  return PolyMod(ctx, a.v_ * b.v_);
}

bool PolyMod::operator==(const PolyMod& o) const {
  if (is_zero() && o.is_zero()) return true;
  return v_ == o.v_;
}

}  // namespace qpr
