#pragma once

#include <compare>
#include <span>
#include <string>

#include <json.hpp>

namespace hodd {

// Extended real number: finite, +∞ or −∞.
//
// Ordering is total: −∞ < every finite value < +∞. NaN is never stored;
// constructing from NaN throws. Function values are built with
// ExtReal::function_value(), which additionally rejects −∞ since the functions
// under analysis are proper.
class ExtReal {
 public:
  enum class Tag { finite, pos_inf, neg_inf };

  constexpr ExtReal() = default;
  // Implicit on purpose: finite reals appear everywhere in derivative code.
  ExtReal(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal pos_inf() { return ExtReal(Tag::pos_inf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Tag::neg_inf); }
  static ExtReal function_value(double v);

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::finite; }
  bool is_pos_inf() const { return tag_ == Tag::pos_inf; }
  bool is_neg_inf() const { return tag_ == Tag::neg_inf; }

  // Throws if not finite.
  double value() const;
  // Finite value, or ±HUGE_VAL for the infinities.
  double to_double() const;

  std::strong_ordering operator<=>(const ExtReal& other) const;
  bool operator==(const ExtReal& other) const;

  // Rejects +∞ + −∞.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a);
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  std::string to_string() const;

 private:
  constexpr explicit ExtReal(Tag t) : tag_(t) {}

  Tag tag_ = Tag::finite;
  double value_ = 0.0;
};

// Least element under the total order. Throws on an empty list.
ExtReal ext_min(std::span<const ExtReal> values);
ExtReal ext_max(std::span<const ExtReal> values);

// c·a + b with sign-aware infinity propagation; c = 0 with infinite a throws.
ExtReal ext_affine_combine(const ExtReal& a, double c, double b);

// Finite as a JSON number, infinities as "+inf" / "-inf".
void to_json(nlohmann::json& j, const ExtReal& v);
void from_json(const nlohmann::json& j, ExtReal& v);

}  // namespace hodd
