#ifndef HURMONO_MARKED_TUPLE_HPP
#define HURMONO_MARKED_TUPLE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurmono/partition.hpp"
#include "hurmono/permutation.hpp"

namespace hurmono {

inline constexpr int kMaxFibers = 6;
inline constexpr int kMaxCanonicalDegree = 9;

/// Labels 1..n on the cycles of one permutation.
///
/// Stored as the label of the cycle through each point, so that transport
/// along a conjugator is a plain relabeling of points.
class Marking {
 public:
  Marking() = default;

  /// `labels` is keyed by the minimum element of each cycle of `sigma`.
  static Marking from_cycle_labels(const Permutation& sigma, const std::map<int, int>& labels);
  /// Label of the cycle through each point, 1-indexed points and labels.
  static Marking from_point_labels(std::span<const int> labels);

  int degree() const { return degree_; }
  int label_of_point(int x) const { return labels_[static_cast<std::size_t>(x - 1)]; }
  /// Cycle minimum -> label.
  std::map<int, int> cycle_labels(const Permutation& sigma) const;

  /// Constant on cycles, bijective onto {1..n}, label j on a cycle of length mu[j].
  bool valid_for(const Permutation& sigma, const Partition& mu) const;

  std::uint8_t raw(int x0) const { return labels_[static_cast<std::size_t>(x0)]; }

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> labels_{};
};

/// (d, g, mu): degrees and genera of the source components, one ramification
/// profile per marked fiber.
struct HurwitzSpec {
  Partition degrees;
  std::vector<int> genera;
  std::vector<Partition> profiles;

  int degree() const { return degrees.weight(); }
  int fibers() const { return static_cast<int>(profiles.size()); }

  /// Throws Error when the shape is inconsistent.
  void validate() const;

  /// "degrees=2,1 genera=0,0 profiles=2,1;2,1;1,1,1;1,1,1"
  std::string to_string() const;
  /// "H_{(2,1),(0,0)}((2,1)^2,(1,1,1)^2)"
  std::string display_name() const;

  friend bool operator==(const HurwitzSpec&, const HurwitzSpec&) = default;
};

/// "2,1" -> degrees partition.
Partition parse_degrees(std::string_view text);
/// "1,0" -> genera.
std::vector<int> parse_genera(std::string_view text);
/// "2,1;2,1;1,1,1;1,1,1", with "2,1^2" repeating a profile.
std::vector<Partition> parse_profiles(std::string_view text);

/// Multiset of (orbit size, orbit genus), kept sorted.
struct ComponentSignature {
  std::vector<std::pair<int, int>> parts;

  static ComponentSignature expected(const HurwitzSpec& spec);
  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
};

/// A fully-marked monodromy representation: permutations multiplying to the
/// identity, each with labeled cycles.
struct MarkedTuple {
  std::vector<Permutation> perms;
  std::vector<Marking> markings;

  int degree() const { return perms.empty() ? 0 : perms.front().degree(); }
  int fibers() const { return static_cast<int>(perms.size()); }

  /// Checks the tuple against `spec`: identity product, cycle types, markings.
  bool satisfies(const HurwitzSpec& spec) const;

  /// "(1 2)^1 (3)^2 | ..." with every cycle shown in canonical order.
  std::string to_string() const;
  /// Parses the `to_string` form; the degree is the number of points listed.
  static MarkedTuple parse(std::string_view text);

  friend bool operator==(const MarkedTuple&, const MarkedTuple&) = default;
};

/// Total order on tuples of equal shape: concatenated image sequences, then
/// labels listed in canonical cycle order fiber by fiber.
std::strong_ordering compare(const MarkedTuple& a, const MarkedTuple& b);

enum class Boundary { zero, one, infty };
inline constexpr std::array<Boundary, 3> kBoundaries{Boundary::zero, Boundary::one, Boundary::infty};
std::string to_string(Boundary b);

std::vector<Marking> enumerate_markings(const Permutation& p, const Partition& mu);

/// Conjugates every fiber by `w` and carries labels along cycle images.
MarkedTuple transport_marking(const Permutation& w, const MarkedTuple& t);
/// Fiber i is conjugated by conjugators[i].
MarkedTuple transport_fibers(std::span<const Permutation> conjugators, const MarkedTuple& t);

/// Minimum of transport_marking(w, t) over all w in S_d. Cost d! * m * d;
/// d > 9 or m > 6 throws GuardExceeded.
MarkedTuple canonicalize(const MarkedTuple& t);

ComponentSignature component_signature(std::span<const Permutation> perms);
inline ComponentSignature component_signature(const MarkedTuple& t) { return component_signature(t.perms); }

/// Product of the permutations that collide at the boundary point `b`.
/// Requires four fibers.
Permutation node_product(const MarkedTuple& t, Boundary b);

/// Flat byte key whose lexicographic order equals `compare`.
struct TupleKey {
  std::array<std::uint8_t, kMaxFibers * kMaxCanonicalDegree> images{};
  std::array<std::uint8_t, kMaxFibers * kMaxCanonicalDegree> labels{};

  friend auto operator<=>(const TupleKey&, const TupleKey&) = default;
  friend bool operator==(const TupleKey&, const TupleKey&) = default;
};

/// Simultaneous-conjugacy minimization split into two stages so that many
/// markings of one permutation tuple share the image search.
class Canonizer {
 public:
  explicit Canonizer(std::span<const Permutation> perms);

  const std::vector<Permutation>& canonical_perms() const { return canonical_; }
  /// Every w with w * perms[i] * w^-1 == canonical_perms()[i] for all i.
  const std::vector<Permutation>& conjugators() const { return conjugators_; }

  /// Key of the canonical form of the tuple with these markings.
  TupleKey key(std::span<const Marking> markings) const;
  MarkedTuple canonical(std::span<const Marking> markings) const;

 private:
  int degree_;
  std::vector<Permutation> canonical_;
  std::vector<Permutation> conjugators_;
  std::vector<Permutation::Images> inverse_conjugators_;
  // Minimum point of each cycle of canonical_[i], in canonical cycle order.
  std::vector<std::vector<std::uint8_t>> cycle_reps_;
  TupleKey image_key_;
};

TupleKey key_of(const MarkedTuple& t);
MarkedTuple tuple_from_key(const TupleKey& key, int degree, int fibers);

}  // namespace hurmono

#endif  // HURMONO_MARKED_TUPLE_HPP
