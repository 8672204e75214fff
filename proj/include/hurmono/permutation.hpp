#ifndef HURMONO_PERMUTATION_HPP
#define HURMONO_PERMUTATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurmono/partition.hpp"

namespace hurmono {

inline constexpr int kMaxDegree = 16;

using Cycle = std::vector<int>;

/// Disjoint cycles of a permutation, fixed points included as 1-cycles.
/// Each cycle starts at its minimum; cycles are ordered by length
/// descending, then by minimum ascending.
struct CycleDecomposition {
  int degree = 0;
  std::vector<Cycle> cycles;
};

/// Bijection of {1..d}, d <= kMaxDegree.
///
/// Products follow (p*q)(x) = p(q(x)): the right factor acts first.
class Permutation {
 public:
  using Images = std::array<std::uint8_t, kMaxDegree>;

  Permutation() = default;

  static Permutation identity(int degree);
  /// 1-indexed image list; throws Error unless it is a bijection of {1..d}.
  static Permutation from_images(std::span<const int> images);
  /// Cycles in 1-indexed notation; omitted points are fixed.
  static Permutation from_cycles(int degree, const std::vector<Cycle>& cycles);
  /// Parses "(1 2)(3 4)" or "()" for the identity.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return degree_; }
  /// Image of the 1-indexed point x.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)] + 1; }
  std::vector<int> images() const;
  bool is_identity() const;

  CycleDecomposition cycles() const;
  /// Disjoint-cycle text, fixed points omitted.
  std::string to_string() const;

  // 0-indexed raw access for the hot loops in the enumeration code.
  std::uint8_t at0(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const Images& raw() const { return img_; }
  static Permutation from_raw(int degree, const Images& images) {
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(degree);
    p.img_ = images;
    return p;
  }

  /// Orders by degree, then lexicographically by images.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t degree_ = 0;
  Images img_{};
};

/// Rebuilds the permutation from its cycles.
Permutation rebuild(const CycleDecomposition& cycles);

/// (p*q)(x) = p(q(x)). Throws Error("degree mismatch").
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// w * p * w^-1; cycle (a_1 .. a_r) of p becomes (w(a_1) .. w(a_r)).
Permutation conjugate(const Permutation& w, const Permutation& p);
Partition cycle_type(const Permutation& p);

/// Left-to-right product p_1 * p_2 * ... * p_m.
Permutation product(std::span<const Permutation> perms);

/// Orbits of the group generated by `perms`, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits(std::span<const Permutation> perms);

/// Every permutation of {1..d} with the given cycle type, sorted. d <= 9.
const std::vector<Permutation>& conjugacy_class(const Partition& type);

/// All of S_d in lexicographic order. d <= 9.
const std::vector<Permutation>& symmetric_group(int degree);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace hurmono

#endif  // HURMONO_PERMUTATION_HPP
