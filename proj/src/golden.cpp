#include "hurmono/golden.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace hurmono {

namespace detail {
extern const std::string_view kGoldenText;
}

namespace {

int parse_int(std::string_view token, const std::string& source, int line, const char* what) {
  int value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value < 0) {
    throw GoldenParseError(source, line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<ComponentTally> parse_expect(std::string_view text, const std::string& source, int line) {
  std::vector<ComponentTally> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view entry = text.substr(pos, comma - pos);
    const std::size_t c1 = entry.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : entry.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw GoldenParseError(source, line, "expect entry '" + std::string(entry) + "' is not count:genus:degree");
    }
    ComponentTally t;
    t.count = parse_int(entry.substr(0, c1), source, line, "count");
    t.genus = parse_int(entry.substr(c1 + 1, c2 - c1 - 1), source, line, "genus");
    const std::string_view degree = entry.substr(c2 + 1);
    if (degree != "*") t.degree = parse_int(degree, source, line, "degree");
    out.push_back(t);
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const std::vector<ComponentTally>& tallies) {
  std::string out = "{";
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(tallies[i].count) + " of genus " + std::to_string(tallies[i].genus);
    out += tallies[i].degree ? " w/ deg " + std::to_string(*tallies[i].degree) : " (deg unasserted)";
  }
  return out + "}";
}

bool GoldenRow::degrees_asserted() const {
  return std::all_of(expected.begin(), expected.end(), [](const ComponentTally& t) { return t.degree.has_value(); });
}

std::vector<GoldenRow> parse_goldens(std::string_view text, const std::string& source) {
  std::vector<GoldenRow> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  // First line of the comment block directly above a row.
  std::string citation;
  bool in_comment_block = false;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      citation.clear();
      in_comment_block = false;
      continue;
    }
    std::string_view content(raw);
    content.remove_prefix(first);
    while (!content.empty() && (content.back() == '\r' || content.back() == ' ' || content.back() == '\t')) {
      content.remove_suffix(1);
    }
    if (content.front() == '#') {
      std::string_view comment = content.substr(1);
      while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
      if (!in_comment_block) citation = std::string(comment);
      in_comment_block = true;
      continue;
    }
    in_comment_block = false;

    std::map<std::string, std::string> fields;
    std::istringstream words{std::string(content)};
    std::string word;
    while (words >> word) {
      const std::size_t eq = word.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw GoldenParseError(source, line, "expected key=value, got '" + word + "'");
      }
      const std::string key = word.substr(0, eq);
      if (key != "degrees" && key != "genera" && key != "profiles" && key != "expect") {
        throw GoldenParseError(source, line, "unknown field '" + key + "'");
      }
      if (!fields.emplace(key, word.substr(eq + 1)).second) {
        throw GoldenParseError(source, line, "duplicate field '" + key + "'");
      }
    }
    for (const char* key : {"degrees", "genera", "profiles", "expect"}) {
      if (!fields.count(key)) throw GoldenParseError(source, line, std::string("missing field '") + key + "'");
    }

    GoldenRow row;
    row.line = line;
    row.citation = citation;
    citation.clear();
    try {
      row.spec.degrees = parse_degrees(fields["degrees"]);
      row.spec.genera = parse_genera(fields["genera"]);
      row.spec.profiles = parse_profiles(fields["profiles"]);
      row.spec.validate();
    } catch (const GoldenParseError&) {
      throw;
    } catch (const Error& e) {
      throw GoldenParseError(source, line, e.what());
    }
    row.expected = parse_expect(fields["expect"], source, line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view embedded_golden_text() { return detail::kGoldenText; }

std::vector<GoldenRow> embedded_goldens() { return parse_goldens(embedded_golden_text(), "<embedded goldens>"); }

std::vector<ComponentTally> tally(const std::vector<ComponentReport>& components, bool with_degree) {
  std::map<std::pair<int, int>, int> counts;
  for (const ComponentReport& c : components) ++counts[{c.genus, with_degree ? c.degree : -1}];
  std::vector<ComponentTally> out;
  for (const auto& [key, count] : counts) {
    ComponentTally t;
    t.count = count;
    t.genus = key.first;
    if (with_degree) t.degree = key.second;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RowVerdict verify_row(const GoldenRow& row, const EnumerationOptions& options) {
  RowVerdict verdict;
  verdict.row = row;
  const SheetGraph graph = build_sheet_graph(row.spec, options);
  verdict.sheet_count = graph.sheets.size();
  verdict.components = components(graph);
  verdict.computed = tally(verdict.components, true);
  verdict.pass = row.degrees_asserted() ? verdict.computed == row.expected
                                        : tally(verdict.components, false) == row.expected;
  return verdict;
}

VerifySummary verify_all(const std::vector<GoldenRow>& rows, std::optional<int> degree,
                         const EnumerationOptions& options) {
  VerifySummary summary;
  for (const GoldenRow& row : rows) {
    if (degree && row.spec.degree() != *degree) continue;
    RowVerdict verdict = verify_row(row, options);
    (verdict.pass ? summary.passed : summary.failed) += 1;
    summary.rows.push_back(std::move(verdict));
  }
  return summary;
}

}  // namespace hurmono
