#pragma once
// Block labels, irreducible-Brauer labels, and weight labels over one
// verification point, with the block-by-block bijection and the actions of
// the center characters and the field automorphism.
//
// A block label is a semisimple label s together with one core datum per
// class of positive multiplicity: an e_Gamma-core partition for a dual-pair
// or self-dual class, and a mode-e-core symbol for X-1 (odd defect) or X+1
// (even defect).  The component weight w_Gamma counts removed hooks:
// (m - |core|)/e_Gamma for partitions, (rank before - rank core)/e for
// symbols.
//
// In odd characteristic the X+1 component decides a six-way case split:
//   I   m = 0                                     one block
//   II  core nonempty, non-degenerate, w = 0      one block
//   III core degenerate (nonempty), w = 0         two blocks (copies 0,1)
//   IV  core empty, m > 0                         one block
//   V   core nonempty, non-degenerate, w > 0      one block
//   VI  core degenerate (nonempty), w > 0         one block (copies fused)
// Even characteristic has no X+1 class (tag EvenPlain, always one block).
// Degenerate symbols stand for two labels here (copies 0 and 1); the empty
// symbol and non-degenerate symbols stand for one.

#include <optional>
#include <string>
#include <vector>

#include "spb/partition.hpp"
#include "spb/ssclasses.hpp"
#include "spb/symbol.hpp"

namespace spb {

enum class CaseTag { I, II, III, IV, V, VI, EvenPlain };
std::string case_to_string(CaseTag t);

struct CoreComponent {
  int classIdx = 0;
  int mult = 0;        // m_Gamma
  int weight = 0;      // w_Gamma
  bool isSymbol = false;
  Partition corePart;  // partition classes
  Symbol coreSym;      // symbol classes
  bool operator==(const CoreComponent&) const = default;
  bool operator<(const CoreComponent& o) const;
};

struct BlockLabel {
  SemisimpleLabel s;
  std::vector<CoreComponent> cores;  // one per class with m > 0, by class index
  CaseTag tag = CaseTag::EvenPlain;
  int copy = 0;              // case III only: which copy of the degenerate core
  long long centerRange = 0; // period of the center-character action before the wrap twist
  long long i = 0;           // position along the center orbit (0 when enumerated)
  bool operator==(const BlockLabel&) const = default;
  bool operator<(const BlockLabel& o) const;
};
std::string block_variant(const BlockLabel& b);  // single | copy0 | copy1 | pair

std::vector<BlockLabel> enumerate_blocks_for(const SsContext& ctx, const SemisimpleLabel& s);
std::vector<BlockLabel> enumerate_blocks(const SsContext& ctx);

struct IBrComponent {
  int classIdx = 0;
  bool isSymbol = false;
  Partition part;
  Symbol sym;
  std::optional<int> copy;  // set on nonempty degenerate symbols (two labels each)
  bool operator==(const IBrComponent&) const = default;
  bool operator<(const IBrComponent& o) const;
};
struct IBrLabel {
  std::vector<IBrComponent> comps;  // by class index; classes with m = 0 omitted
  bool operator==(const IBrLabel&) const = default;
  bool operator<(const IBrLabel& o) const { return comps < o.comps; }
};
std::vector<IBrLabel> enumerate_ibr(const SsContext& ctx, const BlockLabel& b);
long long count_ibr(const SsContext& ctx, const BlockLabel& b);

// Weight label components in quotient form: a plain tuple of partitions, a
// lex-least representative of a swap pair, or a symmetric tuple with a tag.
enum class WeightForm { Plain, Pair, Sym };
struct WeightComponent {
  int classIdx = 0;
  WeightForm form = WeightForm::Plain;
  std::vector<Partition> tuple;  // e_Gamma entries (partition classes) or 2e (symbol classes)
  int j = 0;                     // Sym only: 0 or 1
  bool operator==(const WeightComponent&) const = default;
  bool operator<(const WeightComponent& o) const;
};
struct WeightLabel {
  std::vector<WeightComponent> comps;
  bool operator==(const WeightLabel&) const = default;
  bool operator<(const WeightLabel& o) const { return comps < o.comps; }
};
std::vector<WeightLabel> enumerate_weights(const SsContext& ctx, const BlockLabel& b);
long long count_weights(const SsContext& ctx, const BlockLabel& b);

// The block bijection: sends an irreducible-Brauer label to the weight label
// built from its componentwise quotients (copies matching tags).
WeightLabel bijection_image(const SsContext& ctx, const BlockLabel& b, const IBrLabel& chi);

// Independent per-point label count: product over classes of direct counts
// (partitions by size, symbols by rank), doubling nonempty degenerate
// symbols.  Summed over all semisimple labels this must equal the total of
// |IBr(B)| over all blocks.
long long direct_label_count(const SsContext& ctx, const SemisimpleLabel& s);

// K-form weight count of one component: assignments of ell-cores to
// slotsBase * ell^d slots for each d >= 0 with total weighted size w.
// Counted by convolving honest per-size core counts, independently of the
// quotient-tuple enumeration.
long long kform_component_count(int ell, int slotsBase, int w);
// Same under the half-swap pairing of the 2e slot families: pairs counted
// once, symmetric assignments twice.
long long kform_paired_count(int ell, int e, int w);

struct LabeledIBr {
  BlockLabel block;
  IBrLabel chi;
  bool operator==(const LabeledIBr&) const = default;
};
struct LabeledWeight {
  BlockLabel block;
  WeightLabel w;
  bool operator==(const LabeledWeight&) const = default;
};

// One step of the center-character action: advance the orbit position; at
// the wrap the residual twist flips the case III block copy and the copy /
// Sym tags of degenerate X+1 data (cases IV and VI).
BlockLabel act_center_block(const SsContext& ctx, BlockLabel b);
LabeledIBr act_center(const SsContext& ctx, LabeledIBr x);
LabeledWeight act_center(const SsContext& ctx, LabeledWeight x);

// Field automorphism (coefficient Frobenius) applied k times.
BlockLabel act_field_block(const SsContext& ctx, const BlockLabel& b, int k);
LabeledIBr act_field(const SsContext& ctx, const LabeledIBr& x, int k);
LabeledWeight act_field(const SsContext& ctx, const LabeledWeight& x, int k);

// Orbit sizes of the center action, computed by iteration.
long long center_block_orbit(const SsContext& ctx, const BlockLabel& b);
long long center_ibr_orbit(const SsContext& ctx, const LabeledIBr& x);
long long center_weight_orbit(const SsContext& ctx, const LabeledWeight& x);

}  // namespace spb
