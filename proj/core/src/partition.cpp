#include "ptdt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

std::vector<int> normalize(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
  return parts;
}

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(normalize(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator()(int t) const {
  if (t < 1 || t > length()) return 0;
  return parts_[t - 1];
}

bool Partition::contains(int u, int v) const {
  return u >= 0 && v >= 0 && v < length() && u < parts_[v];
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.str() << ")"; }

std::string triple_str(const Triple& mu) {
  return "(" + mu[0].str() + ")(" + mu[1].str() + ")(" + mu[2].str() + ")";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + token + "'");
    }
    if (used != token.size() || value < 0) throw ParseError("bad partition part '" + token + "'");
    parts.push_back(value);
  }
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  return Partition(parts);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 1; j <= lambda(1); ++j) {
    int count = 0;
    for (int p : lambda.parts()) count += (p >= j);
    out.push_back(count);
  }
  return Partition(out);
}

int diagonal(const Partition& lambda) {
  int d = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda(i) >= i) d = i;
  return d;
}

int diagonal_s(const Partition& lambda) {
  int d = 0;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (lambda(i) >= i - 1) d = i;
  return d;
}

MayaDiagram maya(const Partition& lambda, int charge) {
  MayaDiagram s;
  std::set<int> beads;
  const int len = lambda.length();
  // Beads far below -len - |charge| are all present; scan a window that covers every hole.
  const int depth = len + std::abs(charge) + 2;
  for (int t = 1; t <= len + depth; ++t) beads.insert(2 * (lambda(t) - t + charge) + 1);
  for (int b : beads)
    if (b > 0) s.beads_positive.push_back(b);
  const int lowest = 2 * (-(len + depth) + charge) + 1;
  for (int x = -1; x > lowest; x -= 2)
    if (!beads.count(x)) s.holes_negative.push_back(x);
  return s;
}

ChargedPartition partition_of_maya(const MayaDiagram& s) {
  const int c = s.charge();
  std::set<int, std::greater<int>> beads(s.beads_positive.begin(), s.beads_positive.end());
  const std::set<int> holes(s.holes_negative.begin(), s.holes_negative.end());
  int lowest_hole = holes.empty() ? -1 : *holes.begin();
  const int floor = std::min(lowest_hole, -1) - 4 * (static_cast<int>(beads.size()) + std::abs(c) + 2);
  for (int x = -1; x >= floor; x -= 2)
    if (!holes.count(x)) beads.insert(x);
  std::vector<int> parts;
  int t = 1;
  for (int b : beads) {
    const int part = (b - 1) / 2 + t - c;
    if (part <= 0) break;
    parts.push_back(part);
    ++t;
  }
  return {Partition(parts), c};
}

Partition mu_r(const Partition& lambda) {
  if (lambda.empty()) throw EmptyPartition("mu_r");
  const int d = diagonal(lambda);
  std::vector<int> out;
  for (int i = 1; i < d; ++i) out.push_back(lambda(i) + 1);
  for (int i = d; i < lambda.length(); ++i) out.push_back(lambda(i + 1));
  return Partition(out);
}

Partition mu_c(const Partition& lambda) {
  if (lambda.empty()) throw EmptyPartition("mu_c");
  const int d = diagonal(lambda);
  const int i_d = conjugate(lambda)(d);
  std::vector<int> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.push_back(lambda(i) >= d ? lambda(i) - 1 : lambda(i));
    if (i == i_d) out.push_back(d - 1);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return Partition(out);
}

Partition mu_rc(const Partition& lambda) {
  if (lambda.empty()) throw EmptyPartition("mu_rc");
  const int d = diagonal(lambda);
  std::vector<int> out;
  for (int i = 1; i <= lambda.length(); ++i) out.push_back(i < d ? lambda(i) : std::min(lambda(i), d - 1));
  return Partition(out);
}

int constant_K(const Partition& mu1, const Partition& mu2) {
  if (mu1.empty() || mu2.empty()) throw EmptyPartition("constant_K");
  const int d1 = diagonal(mu1);
  const int d2 = diagonal(mu2);
  return 1 + mu1(d1) - d1 + conjugate(mu2)(d2) - d2;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

}  // namespace ptdt
