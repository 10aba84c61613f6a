#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace knotarc {

/// Integer-coefficient Laurent polynomial in two variables v and z.
/// Sparse map from (v exponent, z exponent) to coefficient; zero
/// coefficients are never stored.
class LaurentPoly2 {
public:
  using Exp = std::pair<int, int>;  // (v_exp, z_exp)
  using Map = std::map<Exp, long long>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(long long c);
  static LaurentPoly2 monomial(int v_exp, int z_exp, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);

  /// Multiply by c * v^dv * z^dz in place.
  void shift(int dv, int dz, long long c = 1);

  long long coeff(int v_exp, int z_exp) const;
  int min_v() const;  // polynomial must be nonzero
  int max_v() const;
  int v_spread() const { return max_v() - min_v(); }

  const Map& terms() const { return terms_; }

  /// Human-readable form, deterministic term order.
  std::string str() const;
  /// JSON array of [v_exp, z_exp, coeff] triples in lexicographic order.
  std::string json() const;

private:
  Map terms_;
  void set(Exp e, long long c);
};

}  // namespace knotarc
