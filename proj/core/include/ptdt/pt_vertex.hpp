#pragma once

#include <optional>
#include <vector>

#include "ptdt/box_geometry.hpp"
#include "ptdt/partition.hpp"
#include "ptdt/qlaurent.hpp"

namespace ptdt {

struct ABConfig {
  std::vector<Cell> A;  // sorted, inside I^- + III
  std::vector<Cell> B;  // sorted, inside II + III
  int size() const { return static_cast<int>(A.size() + B.size()); }
  auto operator<=>(const ABConfig&) const = default;
};

ABConfig make_ab(std::vector<Cell> A, std::vector<Cell> B);

bool is_ab_config(const ABConfig& c, const Triple& mu);

// (I^- n A) + (II \ B) + (III n (A xor B)).
std::vector<Cell> labelling_set(const ABConfig& c, const Triple& mu);

// Sector(i) for i in 1..3, or Free with a component id.
struct Label {
  bool free = false;
  int index = 0;
  auto operator<=>(const Label&) const = default;
};

struct Component {
  std::vector<Cell> cells;  // sorted
  Label tag;
};

struct ComponentLabelling {
  std::vector<Component> components;
  int free_count() const;
};

// Sector/free labelling of the components of the labelling set; nullopt on failure.
std::optional<ComponentLabelling> ab_label(const ABConfig& c, const Triple& mu);

// A III box is unlabelled (multiplicity 2) or carries a line: e_i or a generic free line.
struct LabelledBox {
  Cell cell;
  RegionTag region;
  bool unlabelled = false;  // III boxes only
  std::optional<Label> label;  // III boxes of multiplicity 1
  auto operator<=>(const LabelledBox&) const = default;
};

struct LabelledBoxConfig {
  std::vector<LabelledBox> boxes;  // sorted by cell
  int size() const;                // boxes plus unlabelled III boxes
  int free_count() const;          // distinct free labels
  auto operator<=>(const LabelledBoxConfig&) const = default;
};

// Throws LabelConflict if the labelling fails.
LabelledBoxConfig reconstruct_pi(const ABConfig& c, const Triple& mu);

// The box-stacking rules for a labelled box configuration.
bool check_conditions1(const LabelledBoxConfig& pi, const Triple& mu);

// Moves every multiplicity-1 III box into A.
ABConfig project_base(const ABConfig& c, const Triple& mu);

// 2^(number of free components).
BigInt chi_top(const LabelledBoxConfig& pi);

// Every pair satisfying the stacking conditions with |A| + |B| <= s_max, sorted by size then value.
std::vector<ABConfig> enumerate_ab_all(const Triple& mu, int s_max);
// The labellable ones.
std::vector<ABConfig> enumerate_ab(const Triple& mu, int s_max);

// Box sets closed under in-region front neighbors, graded by size; A side or B side.
std::vector<std::vector<std::vector<Cell>>> stacked_sets(const Triple& mu, bool a_side, int s_max);

// W(mu) truncated at T: q^{-|II|-2|III|} sum over labellable (A,B) of q^{|A|+|B|}.
QLaurent pt_vertex(const Triple& mu, int T);

}  // namespace ptdt
