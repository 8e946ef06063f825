#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "liecap/error.hpp"

namespace liecap {

/// Ground field: the rationals, or GF(p) for an odd prime p.
///
/// Elements are carried as mpq_class in both cases. Over GF(p) every stored
/// value is an integer in [0, p), so the same container type serves both
/// fields and a matrix only needs to remember which field it lives in.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Maps an arbitrary rational into canonical field representation.
  mpq_class from_rational(const mpq_class& q) const;
  mpq_class from_int(long v) const { return from_rational(mpq_class(v)); }

  void reduce(mpq_class& x) const {
    if (p_ != 0) reduce_mod(x);
  }

  mpq_class add(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a + b;
    reduce(r);
    return r;
  }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a - b;
    reduce(r);
    return r;
  }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a * b;
    reduce(r);
    return r;
  }
  mpq_class neg(const mpq_class& a) const {
    mpq_class r = -a;
    reduce(r);
    return r;
  }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  /// a -= f * b, kept canonical.
  void sub_mul(mpq_class& a, const mpq_class& f, const mpq_class& b) const {
    a -= f * b;
    reduce(a);
  }

  /// True when a is the square of a field element (quadratic residue over GF(p)).
  bool is_square(const mpq_class& a) const;

  /// Parses "3", "-2/5", "0.25" (and reduces into the field).
  mpq_class parse(std::string_view text) const;
  std::string format(const mpq_class& a) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce_mod(mpq_class& x) const;

  std::uint32_t p_ = 0;
};

/// A field element tagged with its field. Arithmetic between different
/// fields throws MixedFields.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(0) {}
  Scalar(Field f, const mpq_class& v) : field_(f), value_(f.from_rational(v)) {}
  Scalar(Field f, long v) : Scalar(f, mpq_class(v)) {}

  const Field& field() const noexcept { return field_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  Scalar operator+(const Scalar& o) const { return {check(o), field_.add(value_, o.value_), raw_tag{}}; }
  Scalar operator-(const Scalar& o) const { return {check(o), field_.sub(value_, o.value_), raw_tag{}}; }
  Scalar operator*(const Scalar& o) const { return {check(o), field_.mul(value_, o.value_), raw_tag{}}; }
  Scalar operator/(const Scalar& o) const { return {check(o), field_.div(value_, o.value_), raw_tag{}}; }
  Scalar operator-() const { return {field_, field_.neg(value_), raw_tag{}}; }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

  std::string to_string() const { return field_.format(value_); }

 private:
  struct raw_tag {};
  Scalar(Field f, mpq_class v, raw_tag) : field_(f), value_(std::move(v)) {}
  const Field& check(const Scalar& o) const {
    if (!(field_ == o.field_))
      throw Error(ErrorKind::MixedFields, field_.name() + " vs " + o.field_.name());
    return field_;
  }

  Field field_;
  mpq_class value_;
};

}  // namespace liecap
