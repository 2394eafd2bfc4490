#ifndef RNASHAPE_SERIES_H_
#define RNASHAPE_SERIES_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <vector>

namespace rnashape {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense integer polynomial, index = degree. The zero polynomial has no
// coefficients stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial Monomial(const BigInt& c, int degree);
  // (1+z)^k
  static IntPolynomial OnePlusZPow(int k);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest degree with a non-zero coefficient; -1 for zero.
  int lowest_degree() const;
  BigInt operator[](int k) const;
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt Evaluate(const BigInt& z) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Multiply by z^k.
  IntPolynomial Shifted(int k) const;

  struct DivMod;
  // Synthetic division by (1+z). The remainder is a constant.
  DivMod DivideByOnePlusZ() const;

 private:
  void Trim();
  std::vector<BigInt> c_;
};

struct IntPolynomial::DivMod {
  IntPolynomial quotient;
  BigInt remainder;
};

// Power series truncated at order N: coefficients of z^0..z^N are exact.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<BigInt> coefficients);
  static PowerSeries FromPolynomial(const IntPolynomial& p, int order);

  int order() const { return order_; }
  const BigInt& operator[](int k) const { return c_[k]; }
  BigInt& operator[](int k) { return c_[k]; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const BigInt& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    return a += b;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    return a -= b;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  PowerSeries Shifted(int k) const;  // multiply by z^k, truncate
  PowerSeries Pow(int e) const;
  // Requires constant term +1 or -1; throws PreconditionError otherwise.
  PowerSeries Inverse() const;

 private:
  int order_;
  std::vector<BigInt> c_;
};

// kappa_t^(g) from the two-term recursion with kappa_1^(1) = 1; zero outside
// 1 <= t <= g. Throws PreconditionError for g < 1.
BigInt Kappa(int g, int t);

// Shapes over one backbone by total arc count (rainbow included):
// sum_t kappa_t^(g) z^(2g+t) (1+z)^(2g+t-1).
IntPolynomial ShapePolynomial1(int g);
// Shapes over two backbones: S_{g+1}/(1+z) - sum_{i=1..g} S_i S_{g+1-i}.
// Throws ConsistencyError if the division leaves a remainder.
IntPolynomial ShapePolynomial2(int g);
// Generalized two-backbone shapes, including disconnected pairs.
IntPolynomial ShapePolynomial2General(int g);
// A-shapes: S_g z/(1+z). B-shapes: S_g - A_g.
IntPolynomial APolynomial(int g);
IntPolynomial BPolynomial(int g);

// C = 1 + z C^2, to order N.
PowerSeries CatalanSeries(int order);
// Matchings over two backbones in the fiber of a shape with l non-rainbow
// arcs: C^(2l+2) z^(l+2) / (1 - z C^2)^(l+2). z marks total arcs.
PowerSeries FiberSeries(int l, int order);
// Sum over l of q_g(l) FiberSeries(l) with q_g(l) = [z^(l+2)] Q_g.
PowerSeries MatchingSeries2(int g, int order);

// a_{n+1} / a_n. Throws PreconditionError if a_n is zero or n+1 exceeds the
// order.
BigRational GrowthRatio(const PowerSeries& s, int n);

}  // namespace rnashape

#endif  // RNASHAPE_SERIES_H_
