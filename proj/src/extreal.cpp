#include "hodd/extreal.hpp"

#include <cmath>
#include <cstdio>

#include "hodd/errors.hpp"

namespace hodd {

ExtReal::ExtReal(double v) {
  if (std::isnan(v)) throw DomainError("NaN is not an extended real");
  if (std::isinf(v)) {
    tag_ = v > 0 ? Tag::pos_inf : Tag::neg_inf;
  } else {
    value_ = v;
  }
}

ExtReal ExtReal::function_value(double v) {
  ExtReal r(v);
  if (r.is_neg_inf()) throw DomainError("proper functions never take the value -inf");
  return r;
}

double ExtReal::value() const {
  if (tag_ != Tag::finite) throw ArithmeticError("value() on infinite extended real");
  return value_;
}

double ExtReal::to_double() const {
  switch (tag_) {
    case Tag::pos_inf:
      return HUGE_VAL;
    case Tag::neg_inf:
      return -HUGE_VAL;
    case Tag::finite:
      break;
  }
  return value_;
}

namespace {
int rank(ExtReal::Tag t) {
  switch (t) {
    case ExtReal::Tag::neg_inf:
      return 0;
    case ExtReal::Tag::finite:
      return 1;
    case ExtReal::Tag::pos_inf:
      return 2;
  }
  return 1;
}
}  // namespace

std::strong_ordering ExtReal::operator<=>(const ExtReal& other) const {
  if (tag_ != other.tag_) return rank(tag_) <=> rank(other.tag_);
  if (tag_ != Tag::finite) return std::strong_ordering::equal;
  if (value_ < other.value_) return std::strong_ordering::less;
  if (value_ > other.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ExtReal::operator==(const ExtReal& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw ArithmeticError("indeterminate +inf + -inf");
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return ExtReal(a.value_ + b.value_);
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_pos_inf()) return ExtReal::neg_inf();
  if (a.is_neg_inf()) return ExtReal::pos_inf();
  return ExtReal(-a.value_);
}

std::string ExtReal::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value_);
  return buf;
}

ExtReal ext_min(std::span<const ExtReal> values) {
  if (values.empty()) throw DomainError("empty sample set");
  ExtReal best = values.front();
  for (const ExtReal& v : values.subspan(1))
    if (v < best) best = v;
  return best;
}

ExtReal ext_max(std::span<const ExtReal> values) {
  if (values.empty()) throw DomainError("empty sample set");
  ExtReal best = values.front();
  for (const ExtReal& v : values.subspan(1))
    if (v > best) best = v;
  return best;
}

ExtReal ext_affine_combine(const ExtReal& a, double c, double b) {
  if (std::isnan(c) || std::isnan(b) || std::isinf(c) || std::isinf(b))
    throw DomainError("ext_affine_combine: c and b must be finite");
  if (!a.is_finite()) {
    if (c == 0.0) throw ArithmeticError("indeterminate 0*inf");
    return (c > 0) == a.is_pos_inf() ? ExtReal::pos_inf() : ExtReal::neg_inf();
  }
  return ExtReal(c * a.value() + b);
}

void to_json(nlohmann::json& j, const ExtReal& v) {
  if (v.is_pos_inf()) {
    j = "+inf";
  } else if (v.is_neg_inf()) {
    j = "-inf";
  } else {
    j = v.value();
  }
}

void from_json(const nlohmann::json& j, ExtReal& v) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+inf") {
      v = ExtReal::pos_inf();
    } else if (s == "-inf") {
      v = ExtReal::neg_inf();
    } else {
      throw DomainError("bad extended real literal: " + s);
    }
  } else if (j.is_number()) {
    v = ExtReal(j.get<double>());
  } else {
    throw DomainError("extended real must be a number or \"+inf\"/\"-inf\"");
  }
}

}  // namespace hodd
