#include "rnashape/series.h"

#include <algorithm>
#include <map>
#include <mutex>

#include "rnashape/errors.h"

namespace rnashape {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : c_(std::move(coefficients)) {
  Trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) c_.emplace_back(c);
  Trim();
}

IntPolynomial IntPolynomial::Monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::OnePlusZPow(int k) {
  std::vector<BigInt> v(k + 1);
  v[0] = 1;
  for (int i = 1; i <= k; ++i) v[i] = v[i - 1] * (k - i + 1) / i;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::Trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPolynomial::lowest_degree() const {
  for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
    if (c_[k] != 0) return k;
  }
  return -1;
}

BigInt IntPolynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BigInt IntPolynomial::Evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  Trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  Trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::Shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial::DivMod IntPolynomial::DivideByOnePlusZ() const {
  if (c_.size() <= 1) return {{}, (*this)[0]};
  // Highest coefficient first: q_{k-1} = c_k - q_k.
  const int d = degree();
  std::vector<BigInt> q(d);
  BigInt carry = 0;
  for (int k = d; k >= 1; --k) {
    q[k - 1] = c_[k] - carry;
    carry = q[k - 1];
  }
  return {IntPolynomial(std::move(q)), c_[0] - carry};
}

PowerSeries::PowerSeries(int order) : order_(order), c_(order + 1) {
  if (order < 0) throw PreconditionError("series order must be >= 0");
}

PowerSeries::PowerSeries(int order, std::vector<BigInt> coefficients)
    : PowerSeries(order) {
  for (size_t k = 0; k < coefficients.size() && k <= size_t(order); ++k) {
    c_[k] = std::move(coefficients[k]);
  }
}

PowerSeries PowerSeries::FromPolynomial(const IntPolynomial& p, int order) {
  return PowerSeries(order, p.coefficients());
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  const int n = std::min(order_, o.order_);
  for (int k = 0; k <= n; ++k) c_[k] += o.c_[k];
  order_ = n;
  c_.resize(n + 1);
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  const int n = std::min(order_, o.order_);
  for (int k = 0; k <= n; ++k) c_[k] -= o.c_[k];
  order_ = n;
  c_.resize(n + 1);
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order_, b.order_);
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

PowerSeries PowerSeries::Shifted(int k) const {
  PowerSeries out(order_);
  for (int i = 0; i + k <= order_; ++i) out.c_[i + k] = c_[i];
  return out;
}

PowerSeries PowerSeries::Pow(int e) const {
  PowerSeries result(order_);
  result.c_[0] = 1;
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::Inverse() const {
  const BigInt& c0 = c_[0];
  if (c0 != 1 && c0 != -1) {
    throw PreconditionError("series inverse needs a unit constant term");
  }
  PowerSeries inv(order_);
  inv.c_[0] = c0;  // 1/c0 == c0 for units
  for (int k = 1; k <= order_; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += c_[i] * inv.c_[k - i];
    inv.c_[k] = -acc * c0;
  }
  return inv;
}

namespace {

// Rows of the kappa recursion, computed once and extended on demand.
class KappaCache {
 public:
  BigInt Get(int g, int t) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) < g) Extend();
    if (t < 1 || t > g) return 0;
    return rows_[g - 1][t];
  }

 private:
  void Extend() {
    const int g = static_cast<int>(rows_.size()) + 1;
    std::vector<BigInt> row(g + 2, 0);  // index t, 0..g+1
    if (g == 1) {
      row[1] = 1;
    } else {
      const auto& prev = rows_.back();  // genus g-1, indices 0..g
      for (int t = 1; t <= g; ++t) {
        const long long m = 2LL * g + t;
        BigInt same = t <= g - 1 ? prev[t] : BigInt(0);
        BigInt lower = prev[t - 1];
        BigInt rhs = BigInt((2 * m - 3) * (2 * m - 5)) *
                     ((m - 2) * same + 2 * (2 * m - 7) * lower);
        if (rhs % m != 0) {
          throw ConsistencyError("kappa recursion produced a non-integer");
        }
        row[t] = rhs / m;
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
};

KappaCache& Cache() {
  static KappaCache cache;
  return cache;
}

void RequireGenus(int g, int min) {
  if (g < min) {
    throw PreconditionError("genus must be >= " + std::to_string(min));
  }
}

}  // namespace

BigInt Kappa(int g, int t) {
  RequireGenus(g, 1);
  return Cache().Get(g, t);
}

IntPolynomial ShapePolynomial1(int g) {
  RequireGenus(g, 1);
  IntPolynomial s;
  for (int t = 1; t <= g; ++t) {
    IntPolynomial term = IntPolynomial::OnePlusZPow(2 * g + t - 1)
                             .Shifted(2 * g + t);
    s += term * IntPolynomial(std::vector<BigInt>{Kappa(g, t)});
  }
  return s;
}

IntPolynomial ShapePolynomial2General(int g) {
  RequireGenus(g, 0);
  auto [q, rem] = ShapePolynomial1(g + 1).DivideByOnePlusZ();
  if (rem != 0) {
    throw ConsistencyError("S_" + std::to_string(g + 1) +
                           " is not divisible by 1+z");
  }
  return q;
}

IntPolynomial ShapePolynomial2(int g) {
  IntPolynomial q = ShapePolynomial2General(g);
  for (int i = 1; i <= g; ++i) {
    q -= ShapePolynomial1(i) * ShapePolynomial1(g + 1 - i);
  }
  return q;
}

IntPolynomial APolynomial(int g) {
  auto [q, rem] = ShapePolynomial1(g).Shifted(1).DivideByOnePlusZ();
  if (rem != 0) {
    throw ConsistencyError("z S_" + std::to_string(g) +
                           " is not divisible by 1+z");
  }
  return q;
}

IntPolynomial BPolynomial(int g) { return ShapePolynomial1(g) - APolynomial(g); }

PowerSeries CatalanSeries(int order) {
  PowerSeries c(order);
  c[0] = 1;
  // [z^(k+1)] C = [z^k] C^2
  for (int k = 0; k < order; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) acc += c[i] * c[k - i];
    c[k + 1] = acc;
  }
  return c;
}

PowerSeries FiberSeries(int l, int order) {
  if (l < 1) throw PreconditionError("fiber series needs l >= 1");
  PowerSeries c = CatalanSeries(order);
  PowerSeries one(order);
  one[0] = 1;
  PowerSeries denom = one - (c * c).Shifted(1);
  return c.Pow(2 * l + 2) * denom.Pow(l + 2).Inverse().Shifted(l + 2);
}

PowerSeries MatchingSeries2(int g, int order) {
  IntPolynomial q = ShapePolynomial2(g);
  PowerSeries w(order);
  for (int m = q.lowest_degree(); m <= q.degree(); ++m) {
    if (q[m] == 0 || m - 2 < 1 || m > order) continue;
    PowerSeries f = FiberSeries(m - 2, order);
    f *= q[m];
    w += f;
  }
  return w;
}

BigRational GrowthRatio(const PowerSeries& s, int n) {
  if (n < 0 || n + 1 > s.order()) {
    throw PreconditionError("growth ratio index beyond series order");
  }
  if (s[n] == 0) throw PreconditionError("zero coefficient at n");
  return BigRational(s[n + 1], s[n]);
}

}  // namespace rnashape
