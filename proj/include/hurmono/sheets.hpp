#ifndef HURMONO_SHEETS_HPP
#define HURMONO_SHEETS_HPP

#include <cstddef>
#include <vector>

#include "hurmono/marked_tuple.hpp"

#ifndef HURMONO_SYMMETRY_REDUCTION_DEFAULT
#define HURMONO_SYMMETRY_REDUCTION_DEFAULT 1
#endif

namespace hurmono {

struct EnumerationOptions {
  /// Worker count; <= 0 uses every hardware thread.
  int threads = 0;
  /// Fix the first permutation to one representative of its class. Output is
  /// identical either way.
  bool symmetry_reduction = HURMONO_SYMMETRY_REDUCTION_DEFAULT != 0;
  /// Keep only tuples whose orbit signature equals (degrees, genera). When
  /// false the degrees/genera of the spec are ignored.
  bool match_signature = true;
};

/// One canonical representative per simultaneous-conjugacy class of marked
/// tuples with the spec's cycle types, identity product and orbit signature,
/// sorted by canonical order. d > 9 or m > 6 throws GuardExceeded.
std::vector<MarkedTuple> enumerate_sheets(const HurwitzSpec& spec, const EnumerationOptions& options = {});

/// Same set as enumerate_sheets, as sorted canonical keys.
std::vector<TupleKey> enumerate_sheet_keys(const HurwitzSpec& spec, const EnumerationOptions& options = {});

std::size_t count_sheets(const HurwitzSpec& spec, const EnumerationOptions& options = {});

}  // namespace hurmono

#endif  // HURMONO_SHEETS_HPP
