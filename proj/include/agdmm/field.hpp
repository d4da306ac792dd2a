#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agdmm/error.hpp"

namespace agdmm {

// Element of a finite field, stored as its integer code c0 + c1*p + ... +
// c{k-1}*p^{k-1} where the c_i are the coordinates in the power basis of the
// modulus root. Only meaningful together with the Field it came from.
struct Gf {
  std::uint32_t code = 0;
  friend bool operator==(Gf, Gf) = default;
};

// GF(p^k) with explicit monic irreducible modulus (little-endian coefficient
// list of length k+1). Arithmetic is exact; elements are passed by value as
// codes and all operations take the field as context.
class Field {
 public:
  // Uses the built-in default modulus for (p, k); fails with NoDefaultModulus
  // if there is none.
  Field(std::int64_t p, std::int64_t k);
  Field(std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus);

  std::int64_t characteristic() const { return p_; }
  std::int64_t degree() const { return k_; }
  std::int64_t order() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::string name() const;  // "gf(q)"

  Gf zero() const { return Gf{0}; }
  Gf one() const { return Gf{1}; }
  // Range-checked: code must be in [0, q).
  Gf element(std::int64_t code) const;
  // Embedding of the integers through the prime subfield (n mod p).
  Gf from_int(std::int64_t n) const;
  std::vector<Gf> elements() const;  // all q elements in code order

  Gf add(Gf a, Gf b) const;
  Gf sub(Gf a, Gf b) const;
  Gf neg(Gf a) const;
  Gf mul(Gf a, Gf b) const;
  Gf inv(Gf a) const;  // DivisionByZero on 0
  Gf div(Gf a, Gf b) const;
  Gf pow(Gf a, std::int64_t e) const;  // negative e inverts first

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  void check_and_finish();  // validates p, modulus; computes q_

  std::int64_t p_ = 0;
  std::int64_t k_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> modulus_;
};

// Default modulus for (p, k), or empty if none is built in. k = 1 always has
// one; the table covers the composite fields of order up to 27.
std::vector<std::int64_t> default_modulus(std::int64_t p, std::int64_t k);

bool is_prime(std::int64_t n);

}  // namespace agdmm
