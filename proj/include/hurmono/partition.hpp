#ifndef HURMONO_PARTITION_HPP
#define HURMONO_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hurmono {

/// Integer partition with parts stored in nonincreasing order.
class Partition {
 public:
  Partition() = default;
  /// Parts may be given in any order; they are sorted. Nonpositive parts throw.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,1" (whitespace tolerated). Parts are sorted.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int j) const { return parts_[static_cast<std::size_t>(j)]; }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  /// Sum of (part - 1) over all parts.
  int ramification() const { return weight_ - length(); }

  /// "2,1,1"
  std::string to_csv() const;
  /// "(2,1,1)"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

}  // namespace hurmono

#endif  // HURMONO_PARTITION_HPP
