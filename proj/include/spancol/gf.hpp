#pragma once

// Exact linear algebra over the small finite fields GF(q), q = p^e <= 16.
//
// Elements are indices 0..q-1.  For an extension field the index of an element
// is its coefficient vector read as a base-p number (coefficient of x^i is
// digit i), so 0 is zero, 1 is the unit and p is the generator x.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spancol {

using Elem = std::uint8_t;

class Field {
 public:
  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  // inv(0) is 0; callers never divide by zero.
  Elem inv(Elem a) const noexcept { return inv_[a]; }

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }

  std::string name() const;

 private:
  friend const Field& make_field(int p, int e);
  Field(int p, int e);

  int p_, e_, q_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

// Fields are interned: make_field(p, e) always returns the same object, so
// two fields compare equal iff their addresses do.
const Field& make_field(int p, int e);

// Resolves an order q (a prime power <= 16) to its field.
const Field& field_of_order(int q);

bool is_prime(long long n);

struct FVector {
  const Field* field = nullptr;
  std::vector<Elem> coords;

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  bool is_zero() const noexcept;
  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector unit_vector(const Field& field, int n, int index);

// A subspace of F^n stored by its reduced row echelon basis.  Because the
// RREF is unique, structural equality is subspace equality.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& field, int ambient_dim);
  static Subspace full(const Field& field, int ambient_dim);

  const Field& field() const noexcept { return *field_; }
  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Elem>>& rows() const noexcept { return rows_; }
  FVector row(int i) const { return {field_, rows_[i]}; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const FVector& v) const { return contains(v.coords); }

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows_ < b.rows_; }

 private:
  friend Subspace span_rows(const Field&, int, std::vector<std::vector<Elem>>);
  const Field* field_ = nullptr;
  int ambient_ = 0;
  std::vector<std::vector<Elem>> rows_;
};

// Row-reduces `rows` in place to RREF (leading ones, zero rows removed) and
// returns the pivot columns.
std::vector<int> row_reduce(const Field& field, std::vector<std::vector<Elem>>& rows);

Subspace span_rows(const Field& field, int ambient_dim, std::vector<std::vector<Elem>> rows);
Subspace span(std::span<const FVector> vectors);
// The empty list has no field to infer, so the ambient space is explicit.
Subspace span(const Field& field, int ambient_dim, std::span<const FVector> vectors);
Subspace sum(const Subspace& a, const Subspace& b);

bool subspace_leq(const Subspace& a, const Subspace& b);

inline constexpr long long kDefaultEnumerationCap = 1LL << 20;

// q^n, throwing CapExceeded when it passes `cap`.
long long checked_space_size(const Field& field, int n, long long cap);

// All l-dimensional subspaces of F^n in lexicographic order of their RREF
// basis matrices.
std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int l,
                                          long long cap = kDefaultEnumerationCap);

// Gaussian binomial coefficient [n choose l]_q.
long long gaussian_binomial(long long q, int n, int l);

// All vectors of F^n in lexicographic order (coordinate 0 most significant).
std::vector<FVector> enumerate_vectors(const Field& field, int n,
                                       long long cap = kDefaultEnumerationCap);

// Position of v in the lexicographic enumeration of F^n.
long long vector_index(const FVector& v);

std::string to_string(const FVector& v);

}  // namespace spancol
