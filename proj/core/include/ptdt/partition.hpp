#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ptdt {

// Weakly decreasing positive parts; trailing zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // 1-based part access with lambda_t = 0 beyond the length.
  int operator()(int t) const;
  bool contains(int u, int v) const;  // cell (u, v): u < lambda_{v+1}

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

using Triple = std::array<Partition, 3>;

std::string triple_str(const Triple& mu);

// "4,4,4,3,1"; "" or "0" for the empty partition.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& lambda);
int diagonal(const Partition& lambda);
int diagonal_s(const Partition& lambda);

// Half-integers are stored doubled, so 7/2 is 7.
struct MayaDiagram {
  std::vector<int> beads_positive;  // S^+, ascending
  std::vector<int> holes_negative;  // S^-, descending (closest to zero first)
  int charge() const {
    return static_cast<int>(beads_positive.size()) - static_cast<int>(holes_negative.size());
  }
  bool operator==(const MayaDiagram&) const = default;
};

MayaDiagram maya(const Partition& lambda, int charge = 0);

struct ChargedPartition {
  Partition lambda;
  int charge = 0;
  bool operator==(const ChargedPartition&) const = default;
};

ChargedPartition partition_of_maya(const MayaDiagram& s);

Partition mu_r(const Partition& lambda);
Partition mu_c(const Partition& lambda);
Partition mu_rc(const Partition& lambda);

int constant_K(const Partition& mu1, const Partition& mu2);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions with |lambda| <= n, by size.
std::vector<Partition> partitions_up_to(int n);

}  // namespace ptdt
