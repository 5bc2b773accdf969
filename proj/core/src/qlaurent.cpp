#include "ptdt/qlaurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

constexpr int kOpen = INT_MAX / 4;

int eff_trunc(const QLaurent& a) { return a.exact() ? kOpen : a.trunc(); }

}  // namespace

void QLaurent::normalize() {
  if (!exact_ && static_cast<int>(coeffs_.size()) > trunc_ - valuation_ + 1)
    coeffs_.resize(std::max(0, trunc_ - valuation_ + 1));
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = exact_ ? 1 : trunc_ + 1;
    if (exact_) trunc_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<int>(lead);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (exact_) trunc_ = degree();
}

QLaurent QLaurent::zero(int trunc) {
  QLaurent z;
  z.exact_ = false;
  z.trunc_ = trunc;
  z.valuation_ = trunc + 1;
  return z;
}

QLaurent QLaurent::exact_zero() { return QLaurent(); }

QLaurent QLaurent::one() { return monomial(0, 1); }

QLaurent QLaurent::monomial(int k, BigInt c) {
  QLaurent m;
  m.valuation_ = k;
  m.coeffs_ = {std::move(c)};
  m.normalize();
  return m;
}

QLaurent QLaurent::from_coeffs(int valuation, std::vector<BigInt> coeffs, int trunc) {
  QLaurent s;
  s.exact_ = false;
  s.valuation_ = std::min(valuation, trunc + 1);
  if (valuation > trunc + 1) coeffs.clear();
  s.trunc_ = trunc;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

QLaurent QLaurent::polynomial(const std::map<int, BigInt>& terms) {
  QLaurent p;
  if (terms.empty()) return p;
  p.valuation_ = terms.begin()->first;
  p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.valuation_ + 1), 0);
  for (const auto& [k, c] : terms) p.coeffs_[static_cast<std::size_t>(k - p.valuation_)] += c;
  p.normalize();
  return p;
}

BigInt QLaurent::coeff(int k) const {
  if (!known(k)) throw WindowUnknown("coefficient of q^" + std::to_string(k) + " beyond truncation " + std::to_string(trunc_));
  if (k < valuation_ || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

QLaurent QLaurent::truncated(int t) const {
  if (!exact_ && t > trunc_) throw WindowUnknown("cannot extend truncation");
  std::vector<BigInt> c;
  for (int k = valuation_; k <= std::min(t, degree()); ++k) c.push_back(coeff(k));
  return from_coeffs(valuation_, std::move(c), t);
}

std::string QLaurent::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = valuation_; k <= degree(); ++k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k - valuation_)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  if (!exact_) os << " + O(q^" << trunc_ + 1 << ")";
  return os.str();
}

QLaurent add(const QLaurent& a, const QLaurent& b) {
  const bool exact = a.exact() && b.exact();
  const int t = std::min(eff_trunc(a), eff_trunc(b));
  int lo = std::min(a.valuation(), b.valuation());
  int hi = std::max(a.degree(), b.degree());
  if (!exact) hi = std::min(hi, t);
  std::map<int, BigInt> terms;
  for (int k = lo; k <= hi; ++k) {
    BigInt c = 0;
    if (k >= a.valuation() && k <= a.degree()) c += a.coeffs()[static_cast<std::size_t>(k - a.valuation())];
    if (k >= b.valuation() && k <= b.degree()) c += b.coeffs()[static_cast<std::size_t>(k - b.valuation())];
    if (c != 0) terms[k] = c;
  }
  if (exact) return QLaurent::polynomial(terms);
  std::vector<BigInt> c;
  if (terms.empty()) return QLaurent::zero(t);
  const int v = terms.begin()->first;
  for (int k = v; k <= terms.rbegin()->first; ++k) {
    auto it = terms.find(k);
    c.push_back(it == terms.end() ? BigInt(0) : it->second);
  }
  return QLaurent::from_coeffs(v, std::move(c), t);
}

QLaurent sub(const QLaurent& a, const QLaurent& b) { return add(a, mul(b, QLaurent::monomial(0, -1))); }

QLaurent mul(const QLaurent& a, const QLaurent& b) {
  const bool exact = a.exact() && b.exact();
  // An exact zero factor annihilates everything, unknown terms included.
  if (a.exact() && a.is_zero()) return QLaurent::exact_zero();
  if (b.exact() && b.is_zero()) return QLaurent::exact_zero();
  long long ta = eff_trunc(a), tb = eff_trunc(b);
  long long t = std::min(a.exact() ? LLONG_MAX : ta + b.valuation(), b.exact() ? LLONG_MAX : tb + a.valuation());
  const int v = a.valuation() + b.valuation();
  int hi = a.degree() + b.degree();
  if (!exact) hi = static_cast<int>(std::min<long long>(hi, t));
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(0, hi - v + 1)), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      const std::size_t k = i + j;
      if (k >= c.size()) break;
      c[k] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  if (exact) {
    std::map<int, BigInt> terms;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) terms[v + static_cast<int>(k)] = c[k];
    return QLaurent::polynomial(terms);
  }
  return QLaurent::from_coeffs(v, std::move(c), static_cast<int>(t));
}

QLaurent scale_monomial(const QLaurent& a, int k) {
  if (a.exact()) {
    std::map<int, BigInt> terms;
    for (int e = a.valuation(); e <= a.degree(); ++e) {
      BigInt c = a.coeff(e);
      if (c != 0) terms[e + k] = c;
    }
    return QLaurent::polynomial(terms);
  }
  return QLaurent::from_coeffs(a.valuation() + k, a.coeffs(), a.trunc() + k);
}

QLaurent macmahon(int T) {
  if (T < 0) return QLaurent::zero(T);
  std::vector<BigInt> c(static_cast<std::size_t>(T + 1), 0);
  c[0] = 1;
  for (int i = 1; i <= T; ++i)
    for (int rep = 0; rep < i; ++rep)
      for (int n = i; n <= T; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - i)];
  return QLaurent::from_coeffs(0, std::move(c), T);
}

QLaurent qs_invert_variable(const QLaurent& a) {
  if (!a.exact()) throw NotPolynomial("q -> 1/q needs every term of the series");
  std::map<int, BigInt> terms;
  for (int k = a.valuation(); k <= a.degree(); ++k) {
    BigInt c = a.coeff(k);
    if (c != 0) terms[-k] = c;
  }
  return QLaurent::polynomial(terms);
}

bool qs_eq_to_order(const QLaurent& a, const QLaurent& b, int lo, int hi) {
  if (!a.known(hi) || !b.known(hi))
    throw WindowUnknown("comparison window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] exceeds a truncation");
  for (int k = lo; k <= hi; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

QLaurent series_from_counts(const std::vector<BigInt>& counts, int shift) {
  return QLaurent::from_coeffs(shift, counts, shift + static_cast<int>(counts.size()) - 1);
}

std::ostream& operator<<(std::ostream& os, const QLaurent& a) { return os << a.str(); }

nlohmann::json to_json(const QLaurent& a) {
  nlohmann::json j;
  j["valuation"] = a.valuation();
  j["trunc"] = a.exact() ? a.degree() : a.trunc();
  j["exact"] = a.exact();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j;
}

QLaurent qlaurent_from_json(const nlohmann::json& j) {
  std::vector<BigInt> c;
  for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>());
  const int v = j.at("valuation").get<int>();
  if (j.value("exact", false)) {
    std::map<int, BigInt> terms;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) terms[v + static_cast<int>(k)] = c[k];
    return QLaurent::polynomial(terms);
  }
  return QLaurent::from_coeffs(v, std::move(c), j.at("trunc").get<int>());
}

}  // namespace ptdt
