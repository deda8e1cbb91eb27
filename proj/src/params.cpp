#include "sheun/params.hpp"

namespace sheun {

ParamSet::ParamSet(Rational a, Rational b, Rational c, Rational d)
    : p_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  e1_ = p_[0] + p_[1] + p_[2] + p_[3];
  e2_ = p_[0] * p_[1] + p_[0] * p_[2] + p_[0] * p_[3] + p_[1] * p_[2] +
        p_[1] * p_[3] + p_[2] * p_[3];
  e3_ = p_[0] * p_[1] * p_[2] + p_[0] * p_[1] * p_[3] + p_[0] * p_[2] * p_[3] +
        p_[1] * p_[2] * p_[3];
  e4_ = p_[0] * p_[1] * p_[2] * p_[3];
  Rational gap = p_[0] + p_[1] - p_[2] - p_[3];
  has_sigma_ = !is_zero(gap);
  if (has_sigma_) sigma_ = Rational(1) / gap;
}

const Rational& ParamSet::sigma() const {
  if (!has_sigma_)
    throw SigmaUndefined("a+b = c+d, sigma = 1/(a+b-c-d) undefined");
  return sigma_;
}

Rational ParamSet::alpha() const {
  return e1_ * e1_ / 2 - Rational(4, 3) * e2_;
}

Rational ParamSet::beta() const {
  return -e1_ * e1_ * e1_ + 4 * e2_ * e1_ - 8 * e3_;
}

Rational ParamSet::gamma() const {
  return Rational(3, 4) * alpha() * e1_ * e1_ - e1_ * e1_ * e2_ +
         8 * e1_ * e3_ - 32 * e4_;
}

Rational ParamSet::xi() const {
  Rational e1sq = e1_ * e1_;
  return (Rational(1) - 2 * e1sq + e1sq * e1sq - 256 * e4_) / 2;
}

ParamSet ParamSet::shifted(const Rational& da, const Rational& db,
                           const Rational& dc, const Rational& dd) const {
  return ParamSet(p_[0] + da, p_[1] + db, p_[2] + dc, p_[3] + dd);
}

ParamSet ParamSet::permuted(const std::array<int, 4>& perm) const {
  return ParamSet(p_[static_cast<size_t>(perm[0])],
                  p_[static_cast<size_t>(perm[1])],
                  p_[static_cast<size_t>(perm[2])],
                  p_[static_cast<size_t>(perm[3])]);
}

}  // namespace sheun
