#pragma once

// Exact arithmetic in GF(p^n), polynomial basis over GF(p).
//
// An element is stored as its base-p encoding: the coefficient of x^i is the
// i-th base-p digit. This is also the I/O encoding, so "encoding order" below
// means the natural integer order of these values.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpk/errors.hpp"

namespace gpk {

using Coeff = std::uint32_t;

class Elem;

class Field {
 public:
  using Value = std::uint64_t;

  static constexpr std::uint32_t kMaxDegree = 24;
  static constexpr Value kMaxSize = Value{1} << 48;
  static constexpr Value kTableLimit = Value{1} << 20;

  /// Interned context for GF(p^n). Repeated calls return the same object.
  /// Throws FieldError if p is not prime, n == 0, n > kMaxDegree or
  /// p^n > kMaxSize.
  static const Field& get(std::uint32_t p, std::uint32_t n);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  ~Field();

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  Value size() const noexcept { return size_; }
  /// Monic modulus, little-endian, length n + 1.
  const std::vector<Coeff>& modulus() const noexcept { return modulus_; }

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;
  Value pow(Value a, std::uint64_t e) const;
  /// a^(p^r).
  Value frobenius(Value a, std::uint32_t r) const;

  Value from_int(std::int64_t c) const;
  Value from_coeffs(std::span<const Coeff> coeffs) const;
  std::vector<Coeff> coeffs(Value a) const;

  /// Smallest element (encoding order) generating the multiplicative group.
  Value primitive() const noexcept { return primitive_; }
  std::uint64_t multiplicative_order(Value a) const;

  Elem operator()(Value v) const;
  Elem zero() const;
  Elem one() const;
  Elem from_int_elem(std::int64_t c) const;

  bool uses_tables() const noexcept { return !exp_.empty(); }
  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t n);

  Value mul_poly(Value a, Value b) const;
  Value add_digits(Value a, Value b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  Value size_;
  std::vector<Coeff> modulus_;
  Value primitive_ = 0;
  std::vector<Value> pow_p_;  // p^i, i <= n
  // Log tables, present when size_ <= kTableLimit.
  std::vector<std::uint32_t> exp_;  // length 2 (size - 1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> zech_; // log(1 + g^k), kNoLog if zero
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

/// Element of a Field. Binary operations require both operands to live in
/// the same interned field.
class Elem {
 public:
  using Value = Field::Value;

  Elem() = default;
  Elem(const Field& f, Value v) : field_(&f), value_(v) {}

  const Field& field() const;
  bool valid() const noexcept { return field_ != nullptr; }
  Value value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Elem inv() const;
  Elem pow(std::uint64_t e) const;
  Elem frobenius(std::uint32_t r) const;
  std::vector<Coeff> coeffs() const;
  /// Little-endian decimal digit string, e.g. "01" for x in GF(4).
  std::string to_string() const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

  friend bool operator==(const Elem& a, const Elem& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  /// Encoding order; elements of different fields order by field address.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) noexcept {
    if (a.field_ != b.field_) return std::compare_three_way{}(a.field_, b.field_);
    return a.value_ <=> b.value_;
  }

 private:
  const Field& checked(const Elem& o) const;

  const Field* field_ = nullptr;
  Value value_ = 0;
};

/// Parses a little-endian digit string ("01" -> x) into an element of f.
Elem parse_elem(const Field& f, const std::string& digits);

/// Ring embedding of a subfield `small` into `big`, sending the generator of
/// `small` to the smallest root (encoding order) of its modulus in `big`.
class FieldEmbedding {
 public:
  /// Interned embedding. Throws FieldError unless char(small) == char(big)
  /// and deg(small) divides deg(big).
  static const FieldEmbedding& get(const Field& small, const Field& big);

  const Field& source() const noexcept { return *small_; }
  const Field& target() const noexcept { return *big_; }
  Elem root() const { return (*big_)(root_); }

  Elem operator()(const Elem& a) const;
  bool in_image(const Elem& b) const;
  /// Inverse on the image. Throws FieldError if b is not in the image.
  Elem preimage(const Elem& b) const;

 private:
  FieldEmbedding(const Field& small, const Field& big);

  const Field* small_;
  const Field* big_;
  Field::Value root_ = 0;
  std::vector<Field::Value> image_;
  std::unordered_map<Field::Value, Field::Value> back_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility over GF(p), Ben-Or test. Coefficients little-endian.
bool is_irreducible(std::span<const Coeff> monic_poly, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree n over GF(p):
/// the non-leading coefficients read as a base-p integer are minimal.
std::vector<Coeff> smallest_irreducible(std::uint32_t p, std::uint32_t n);

/// Solver for x^q + x = c over a field containing GF(q^2). The map is
/// GF(p)-linear; it is row-reduced once and reused.
class AdditiveSolver {
 public:
  AdditiveSolver(const Field& f, std::uint64_t q);

  /// All solutions in encoding order; empty when c is not in the image.
  std::vector<Elem> solve(const Elem& c) const;
  std::uint64_t q() const noexcept { return q_; }
  std::size_t kernel_dimension() const noexcept { return kernel_.size(); }

 private:
  const Field* field_;
  std::uint64_t q_;
  std::uint32_t n_;
  // Row-reduced [A | I] bookkeeping: for solving A x = c we store the
  // transformation T with T A in reduced form.
  std::vector<std::vector<Coeff>> reduced_;   // n x n, RREF of A
  std::vector<std::vector<Coeff>> transform_; // n x n, T
  std::vector<int> pivot_col_;                // per row, -1 if zero row
  std::vector<std::vector<Coeff>> kernel_;    // basis vectors
};

/// All x in f with x^q + x = c.
std::vector<Elem> solve_additive(const Elem& c, const Field& f, std::uint64_t q);

/// True iff b^q + b = a^(q+1). Throws FieldError unless a, b lie in GF(q^2).
bool hermitian_pair_check(const Elem& a, const Elem& b, std::uint64_t q);

/// x^(q^2) == x.
bool in_subfield(const Elem& x, std::uint64_t subfield_size);

}  // namespace gpk

template <>
struct std::hash<gpk::Elem> {
  std::size_t operator()(const gpk::Elem& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.value()) ^
           (std::hash<const void*>{}(e.valid() ? &e.field() : nullptr) << 1);
  }
};
