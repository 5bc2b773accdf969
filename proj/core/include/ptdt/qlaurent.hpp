#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace ptdt {

using BigInt = boost::multiprecision::cpp_int;

// Truncated Laurent series in q. Exponents above trunc() are unknown unless the
// series is exact (a genuine Laurent polynomial, all terms known).
class QLaurent {
 public:
  QLaurent() = default;

  static QLaurent zero(int trunc);
  static QLaurent exact_zero();
  static QLaurent one();
  static QLaurent monomial(int k, BigInt c = 1);
  static QLaurent from_coeffs(int valuation, std::vector<BigInt> coeffs, int trunc);
  static QLaurent polynomial(const std::map<int, BigInt>& terms);

  int valuation() const { return valuation_; }
  int trunc() const { return trunc_; }
  bool exact() const { return exact_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Highest exponent with a stored nonzero coefficient; valuation - 1 for zero.
  int degree() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of q^k; throws WindowUnknown above the truncation.
  BigInt coeff(int k) const;
  bool known(int k) const { return exact_ || k <= trunc_; }

  QLaurent truncated(int t) const;

  std::string str() const;

  bool operator==(const QLaurent&) const = default;

 private:
  void normalize();

  int valuation_ = 1;
  int trunc_ = 0;
  bool exact_ = true;
  std::vector<BigInt> coeffs_;
};

QLaurent add(const QLaurent& a, const QLaurent& b);
QLaurent sub(const QLaurent& a, const QLaurent& b);
QLaurent mul(const QLaurent& a, const QLaurent& b);
QLaurent scale_monomial(const QLaurent& a, int k);

inline QLaurent operator+(const QLaurent& a, const QLaurent& b) { return add(a, b); }
inline QLaurent operator-(const QLaurent& a, const QLaurent& b) { return sub(a, b); }
inline QLaurent operator*(const QLaurent& a, const QLaurent& b) { return mul(a, b); }

QLaurent macmahon(int T);

// q -> q^{-1}; requires an exact series.
QLaurent qs_invert_variable(const QLaurent& a);

// Exact equality of coefficients on [lo, hi]; throws WindowUnknown if either side
// is not known on the whole window.
bool qs_eq_to_order(const QLaurent& a, const QLaurent& b, int lo, int hi);

// Series from a count table: q^shift * sum_k counts[k] q^k, known through k = counts.size() - 1.
QLaurent series_from_counts(const std::vector<BigInt>& counts, int shift);

std::ostream& operator<<(std::ostream& os, const QLaurent& a);

nlohmann::json to_json(const QLaurent& a);
QLaurent qlaurent_from_json(const nlohmann::json& j);

}  // namespace ptdt
