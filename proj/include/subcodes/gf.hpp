#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcodes/error.hpp"

namespace subcodes {

class FieldElement;

/// Finite field GF(p^m). Elements are addressed by an index in [0, p^m);
/// the index of an element with coefficient vector (c_0, ..., c_{m-1})
/// (little-endian, c_0 = constant term) is sum c_i * p^i, so the additive
/// vector view of element k is just the base-p digits of k.
///
/// Value type with a shared immutable implementation; cheap to copy and
/// safe to share across threads.
class Field {
 public:
  /// Prime field GF(p), or GF(p^m) using the built-in polynomial table
  /// (orders 4, 8, 9, 16, 25, 27, 32, 49, 64).
  explicit Field(int p, int m = 1);

  /// GF(p^m) with an explicit monic irreducible reduction polynomial,
  /// little-endian coefficients of length m+1.
  Field(int p, int m, std::vector<int> poly);

  /// Parses a descriptor "p^m" or "p^m/c0,c1,...,cm".
  static Field parse(std::string_view descriptor);

  int p() const { return impl_->p; }
  int m() const { return impl_->m; }
  int order() const { return impl_->q; }
  const std::vector<int>& reduction_poly() const { return impl_->poly; }
  std::string descriptor() const;

  // Index-based arithmetic. Indices must lie in [0, order()).
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws on a == 0
  int pow(int a, long long e) const;

  std::vector<int> to_vector(int a) const;
  int from_vector(std::span<const int> v) const;

  FieldElement element(int index) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Same (p, m, reduction polynomial).
  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Impl {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> poly;           // length m+1, monic; {0,1} placeholder for m == 1
    std::vector<int16_t> mul_table;  // q*q entries when q <= kTableLimit, else empty
    std::vector<int16_t> inv_table;  // q entries when tabulated (inv_table[0] unused)
  };
  static constexpr int kTableLimit = 256;

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const Impl> make_impl(int p, int m, std::optional<std::vector<int>> poly);
  int mul_slow(int a, int b) const;

  std::shared_ptr<const Impl> impl_;
};

/// An element of a specific Field; carries its owning field, so mixed-field
/// arithmetic is rejected at run time.
class FieldElement {
 public:
  FieldElement(Field field, int index);

  const Field& field() const { return field_; }
  int index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  std::vector<int> to_vector() const { return field_.to_vector(index_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check_same_field(const FieldElement& o) const;
  Field field_;
  int index_;
};

bool is_prime(long long n);

}  // namespace subcodes
