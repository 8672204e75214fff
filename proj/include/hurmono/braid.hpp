#ifndef HURMONO_BRAID_HPP
#define HURMONO_BRAID_HPP

#include <array>
#include <vector>

#include "hurmono/marked_tuple.hpp"
#include "hurmono/partition.hpp"
#include "hurmono/sheets.hpp"

namespace hurmono {

// Monodromy of the target map for four marked fibers. Each move rewrites the
// tuple as tau_i = w_i sigma_i w_i^-1 and carries labels along w_i.

/// Loop around infinity: w = (e, e, s3 s4, s3).
MarkedTuple move_infty(const MarkedTuple& t);
/// Loop around one: w = (e, s2 s3 s4 s3^-1, e, s3^-1 s2 s3).
MarkedTuple move_one(const MarkedTuple& t);
/// Loop around zero, W = s2 s3 s4 s3^-1 s2^-1: w = (s1 W, e, e, s3^-1 s2^-1 s1 s2 s3).
MarkedTuple move_zero(const MarkedTuple& t);
MarkedTuple move(const MarkedTuple& t, Boundary b);

/// The per-fiber conjugators used by move(t, b).
std::array<Permutation, 4> move_conjugators(const MarkedTuple& t, Boundary b);

/// Sheets plus the permutation each boundary loop induces on them.
/// Sheet indices are 0-based here and 1-based in every serialized form.
struct SheetGraph {
  HurwitzSpec spec;
  std::vector<MarkedTuple> sheets;
  std::array<std::vector<int>, 3> actions;  // zero, one, infty

  const std::vector<int>& action(Boundary b) const { return actions[static_cast<std::size_t>(b)]; }
};

SheetGraph build_sheet_graph(const HurwitzSpec& spec, const EnumerationOptions& options = {});

struct ComponentReport {
  std::vector<int> sheet_indices;  // sorted, 0-based
  int degree = 0;
  int genus = 0;
  std::array<Partition, 3> ram;                        // cycle type of each action on the component
  std::array<std::vector<Partition>, 3> node_profiles;  // one per cycle of the action, sorted
  std::array<std::vector<std::vector<int>>, 3> cycles;  // action cycles, 0-based sheet indices
  bool loop_product_identity = false;                   // s_zero s_one s_infty == id on the component

  const Partition& ram_over(Boundary b) const { return ram[static_cast<std::size_t>(b)]; }

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Orbits of <s_zero, s_one, s_infty> with degree, ramification and genus,
/// sorted by (degree, genus, ram).
std::vector<ComponentReport> components(const SheetGraph& graph);

}  // namespace hurmono

#endif  // HURMONO_BRAID_HPP
