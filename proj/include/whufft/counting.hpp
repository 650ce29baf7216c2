#pragma once

// Operation-counting scalar arithmetic.
//
// Transforms in this library are templates over a scalar type. Instantiated
// with `double` they run uninstrumented; instantiated with `Counted` every
// arithmetic step is charged to the innermost active TallyScope on the
// calling thread. Both instantiations execute the same floating-point
// operations in the same order, so results agree bit for bit.
//
// Charging rules (real operations):
//   add / subtract                      -> AddSub
//   negate                              -> free
//   multiply by constant 0, +1, -1      -> free
//   multiply by constant 1/2            -> Div2
//   multiply by any other 2^e           -> MulPow2
//   multiply by any other constant      -> Mul
//   multiply two non-constant values    -> Mul
// An addition with a structurally zero operand (a value produced by
// multiplying with the constant 0) is not a gate in the circuit and is free.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <type_traits>
#include <utility>

namespace whufft {

enum class OpClass : std::uint8_t { AddSub, Mul, Div2, MulPow2 };

struct OpTally {
  std::uint64_t add_sub = 0;
  std::uint64_t mul = 0;
  std::uint64_t div2 = 0;
  std::uint64_t mul_pow2 = 0;

  [[nodiscard]] constexpr std::uint64_t total() const {
    return add_sub + mul + div2 + mul_pow2;
  }

  constexpr void record(OpClass c, std::uint64_t n = 1) {
    switch (c) {
      case OpClass::AddSub: add_sub += n; break;
      case OpClass::Mul: mul += n; break;
      case OpClass::Div2: div2 += n; break;
      case OpClass::MulPow2: mul_pow2 += n; break;
    }
  }

  constexpr OpTally& operator+=(const OpTally& o) {
    add_sub += o.add_sub;
    mul += o.mul;
    div2 += o.div2;
    mul_pow2 += o.mul_pow2;
    return *this;
  }
  friend constexpr OpTally operator+(OpTally a, const OpTally& b) { return a += b; }
  friend constexpr OpTally operator*(std::uint64_t s, OpTally t) {
    t.add_sub *= s;
    t.mul *= s;
    t.div2 *= s;
    t.mul_pow2 *= s;
    return t;
  }
  friend constexpr OpTally operator*(OpTally t, std::uint64_t s) { return s * t; }
  friend constexpr bool operator==(const OpTally&, const OpTally&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpTally& t);

struct ConstKind {
  enum class Tag : std::uint8_t { Zero, PlusOne, MinusOne, PowTwo, Generic };
  Tag tag = Tag::Generic;
  int exponent = 0;  // meaningful only for PowTwo

  friend constexpr bool operator==(const ConstKind&, const ConstKind&) = default;
  [[nodiscard]] constexpr bool is_free() const {
    return tag == Tag::Zero || tag == Tag::PlusOne || tag == Tag::MinusOne;
  }
};

// Throws std::invalid_argument for NaN or infinity.
ConstKind classify_constant(double c);

// Describes one arithmetic step of the circuit for charging purposes.
struct Step {
  enum class Kind : std::uint8_t {
    RealAddSub,
    RealMulConst,
    RealMulVar,
    ComplexAddSub,
    ComplexScaleConst,  // real constant times complex value
    ComplexMulGeneric,
    ComplexMulUnitPart,  // one real part of one factor is +-1
  };
  Kind kind;
  ConstKind constant{};

  static constexpr Step add_sub() { return {Kind::RealAddSub, {}}; }
  static constexpr Step mul_const(ConstKind k) { return {Kind::RealMulConst, k}; }
  static constexpr Step mul_var() { return {Kind::RealMulVar, {}}; }
  static constexpr Step complex_add_sub() { return {Kind::ComplexAddSub, {}}; }
  static constexpr Step complex_scale(ConstKind k) { return {Kind::ComplexScaleConst, k}; }
  static constexpr Step complex_mul() { return {Kind::ComplexMulGeneric, {}}; }
  static constexpr Step complex_mul_unit_part() { return {Kind::ComplexMulUnitPart, {}}; }
};

// Adds the real operations of `step` to `tally` and returns it.
OpTally charge(OpTally tally, const Step& step);

namespace detail {
OpTally*& active_tally();

inline void charge_one(OpClass c) {
  if (OpTally* t = active_tally()) t->record(c);
}
}  // namespace detail

// Makes `tally()` the destination of every charge issued on this thread
// until destruction; the previously active scope is restored afterwards.
class TallyScope {
 public:
  TallyScope() : previous_(detail::active_tally()) { detail::active_tally() = &tally_; }
  ~TallyScope() { detail::active_tally() = previous_; }
  TallyScope(const TallyScope&) = delete;
  TallyScope& operator=(const TallyScope&) = delete;

  [[nodiscard]] const OpTally& tally() const { return tally_; }

 private:
  OpTally tally_;
  OpTally* previous_;
};

// A circuit constant, classified once when constructed.
class Constant {
 public:
  constexpr Constant() = default;
  explicit Constant(double v) : value_(v), kind_(classify_constant(v)) {}

  [[nodiscard]] constexpr double value() const { return value_; }
  [[nodiscard]] constexpr ConstKind kind() const { return kind_; }

  static Constant pow2(int e);

 private:
  double value_ = 0.0;
  ConstKind kind_{ConstKind::Tag::Zero, 0};
};

inline double operator*(double x, const Constant& c) { return x * c.value(); }
inline double operator*(const Constant& c, double x) { return c.value() * x; }

// Real value whose arithmetic is charged to the active TallyScope.
class Counted {
 public:
  constexpr Counted() = default;
  constexpr explicit Counted(double v) : value_(v) {}

  // The output of a zero gate; adding it to anything is free.
  static constexpr Counted structural_zero() { return Counted(0.0, true); }

  [[nodiscard]] constexpr double value() const { return value_; }
  [[nodiscard]] constexpr bool is_structural_zero() const { return zero_; }

  friend Counted operator+(const Counted& a, const Counted& b) {
    if (!a.zero_ && !b.zero_) detail::charge_one(OpClass::AddSub);
    return Counted(a.value_ + b.value_, a.zero_ && b.zero_);
  }
  friend Counted operator-(const Counted& a, const Counted& b) {
    if (!a.zero_ && !b.zero_) detail::charge_one(OpClass::AddSub);
    return Counted(a.value_ - b.value_, a.zero_ && b.zero_);
  }
  friend Counted operator-(const Counted& a) { return Counted(-a.value_, a.zero_); }

  friend Counted operator*(const Counted& a, const Counted& b) {
    if (!a.zero_ && !b.zero_) detail::charge_one(OpClass::Mul);
    return Counted(a.value_ * b.value_, a.zero_ || b.zero_);
  }
  friend Counted operator*(const Counted& a, const Constant& c) {
    return Counted(a.value_ * c.value(), a.zero_ || scale_charge(a, c.kind()));
  }
  friend Counted operator*(const Constant& c, const Counted& a) {
    return Counted(c.value() * a.value_, a.zero_ || scale_charge(a, c.kind()));
  }

  Counted& operator+=(const Counted& o) { return *this = *this + o; }
  Counted& operator-=(const Counted& o) { return *this = *this - o; }

 private:
  constexpr Counted(double v, bool zero) : value_(v), zero_(zero) {}

  // Charges the scaling of `a` by a constant of kind `k`; returns true when
  // the product is structurally zero.
  static bool scale_charge(const Counted& a, ConstKind k) {
    using Tag = ConstKind::Tag;
    if (k.tag == Tag::Zero) return true;
    if (a.zero_ || k.is_free()) return false;
    if (k.tag == Tag::PowTwo) {
      detail::charge_one(k.exponent == -1 ? OpClass::Div2 : OpClass::MulPow2);
    } else {
      detail::charge_one(OpClass::Mul);
    }
    return false;
  }

  double value_ = 0.0;
  bool zero_ = false;
};

inline double value_of(double x) { return x; }
inline double value_of(const Counted& x) { return x.value(); }

template <class S>
S from_value(double v) {
  return S(v);
}

template <class T>
concept RealScalar = std::is_same_v<T, double> || std::is_same_v<T, Counted>;

// Runs `fn` under a fresh TallyScope and returns its result together with
// the operations it charged.
template <class Fn>
auto with_tally(Fn&& fn) {
  TallyScope scope;
  if constexpr (std::is_void_v<std::invoke_result_t<Fn>>) {
    std::invoke(std::forward<Fn>(fn));
    return scope.tally();
  } else {
    auto result = std::invoke(std::forward<Fn>(fn));
    return std::pair{std::move(result), scope.tally()};
  }
}

}  // namespace whufft
