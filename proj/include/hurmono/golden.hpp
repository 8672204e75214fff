#ifndef HURMONO_GOLDEN_HPP
#define HURMONO_GOLDEN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurmono/braid.hpp"
#include "hurmono/error.hpp"
#include "hurmono/marked_tuple.hpp"
#include "hurmono/sheets.hpp"

namespace hurmono {

/// A golden file could not be read; carries the 1-based line.
class GoldenParseError : public Error {
 public:
  GoldenParseError(std::string source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}
  int line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  int line_;
};

/// `count` components of genus `genus`, each mapping with degree `degree`.
/// A missing degree is not asserted.
struct ComponentTally {
  int count = 0;
  int genus = 0;
  std::optional<int> degree;

  friend bool operator==(const ComponentTally&, const ComponentTally&) = default;
  friend auto operator<=>(const ComponentTally&, const ComponentTally&) = default;
};

std::string to_string(const std::vector<ComponentTally>& tallies);

struct GoldenRow {
  HurwitzSpec spec;
  std::vector<ComponentTally> expected;  // sorted
  std::string citation;                  // comment line preceding the row
  int line = 0;

  bool degrees_asserted() const;
};

struct RowVerdict {
  GoldenRow row;
  bool pass = false;
  std::vector<ComponentTally> computed;  // sorted, degrees always present
  std::size_t sheet_count = 0;
  std::vector<ComponentReport> components;
};

struct VerifySummary {
  int passed = 0;
  int failed = 0;
  std::vector<RowVerdict> rows;

  bool ok() const { return failed == 0; }
};

/// Parses the golden file format. Throws GoldenParseError.
std::vector<GoldenRow> parse_goldens(std::string_view text, const std::string& source = "<goldens>");

/// Golden rows compiled into the library.
std::string_view embedded_golden_text();
std::vector<GoldenRow> embedded_goldens();

/// Groups components by (genus, degree); degrees dropped when `with_degree` is false.
std::vector<ComponentTally> tally(const std::vector<ComponentReport>& components, bool with_degree = true);

RowVerdict verify_row(const GoldenRow& row, const EnumerationOptions& options = {});

/// Rows whose total degree equals `degree`, or all rows.
VerifySummary verify_all(const std::vector<GoldenRow>& rows, std::optional<int> degree = std::nullopt,
                         const EnumerationOptions& options = {});

}  // namespace hurmono

#endif  // HURMONO_GOLDEN_HPP
