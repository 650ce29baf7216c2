#include "whufft/counting.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace whufft {

namespace detail {
OpTally*& active_tally() {
  thread_local OpTally* active = nullptr;
  return active;
}
}  // namespace detail

std::ostream& operator<<(std::ostream& os, const OpTally& t) {
  return os << "{add_sub: " << t.add_sub << ", mul: " << t.mul << ", div2: " << t.div2
            << ", mul_pow2: " << t.mul_pow2 << "}";
}

ConstKind classify_constant(double c) {
  using Tag = ConstKind::Tag;
  if (!std::isfinite(c)) throw std::invalid_argument("classify_constant: non-finite constant");
  if (c == 0.0) return {Tag::Zero, 0};
  if (c == 1.0) return {Tag::PlusOne, 0};
  if (c == -1.0) return {Tag::MinusOne, 0};
  if (c > 0.0) {
    int e = 0;
    const double m = std::frexp(c, &e);  // c = m * 2^e, m in [0.5, 1)
    if (m == 0.5) return {Tag::PowTwo, e - 1};
  }
  return {Tag::Generic, 0};
}

Constant Constant::pow2(int e) { return Constant(std::ldexp(1.0, e)); }

OpTally charge(OpTally tally, const Step& step) {
  using Kind = Step::Kind;
  auto scale_class = [](ConstKind k) {
    if (k.tag == ConstKind::Tag::PowTwo) return k.exponent == -1 ? OpClass::Div2 : OpClass::MulPow2;
    return OpClass::Mul;
  };
  switch (step.kind) {
    case Kind::RealAddSub: tally.record(OpClass::AddSub); break;
    case Kind::RealMulConst:
      if (!step.constant.is_free()) tally.record(scale_class(step.constant));
      break;
    case Kind::RealMulVar: tally.record(OpClass::Mul); break;
    case Kind::ComplexAddSub: tally.record(OpClass::AddSub, 2); break;
    case Kind::ComplexScaleConst:
      if (!step.constant.is_free()) tally.record(scale_class(step.constant), 2);
      break;
    case Kind::ComplexMulGeneric:
      tally.record(OpClass::Mul, 4);
      tally.record(OpClass::AddSub, 2);
      break;
    case Kind::ComplexMulUnitPart:
      tally.record(OpClass::Mul, 2);
      tally.record(OpClass::AddSub, 2);
      break;
  }
  return tally;
}

}  // namespace whufft
