#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "ballcomp/errors.hpp"

namespace ballcomp {

/// Integers extended with -inf and +inf.
///
/// Distances to unreachable vertices (and the minimum of an empty set) are
/// +inf; the maximum of an empty set is -1, which is an ordinary value.
/// Adding +inf to -inf throws ContractViolation.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design of the arithmetic

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// The finite value; throws ContractViolation on an infinity.
  std::int64_t value() const {
    if (!is_finite()) throw ContractViolation("ExtInt::value() on an infinite value");
    return value_;
  }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
      throw ContractViolation("ExtInt: (+inf) + (-inf) is undefined");
    }
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return ExtInt(a.value_ + b.value_);
  }

  friend ExtInt operator-(ExtInt a) {
    switch (a.kind_) {
      case Kind::PosInf: return neg_inf();
      case Kind::NegInf: return pos_inf();
      case Kind::Finite: break;
    }
    return ExtInt(-a.value_);
  }

  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return a.rank() <=> b.rank();
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtInt x) {
    if (x.is_pos_inf()) return os << "inf";
    if (x.is_neg_inf()) return os << "-inf";
    return os << x.value_;
  }

 private:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  constexpr int rank() const { return static_cast<int>(kind_); }

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

inline constexpr ExtInt kInfinity = ExtInt::pos_inf();

}  // namespace ballcomp
