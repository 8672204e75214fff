#ifndef HURMONO_REPORT_IO_HPP
#define HURMONO_REPORT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "hurmono/braid.hpp"
#include "hurmono/golden.hpp"
#include "hurmono/marked_tuple.hpp"

namespace hurmono {

inline constexpr int kSchemaVersion = 1;

// Sheet indices and points are 1-based in every serialized form.

nlohmann::json to_json(const HurwitzSpec& spec);
HurwitzSpec spec_from_json(const nlohmann::json& j);

/// Per fiber, a list of {"cycle": [...], "label": j} in canonical cycle order.
nlohmann::json to_json(const MarkedTuple& t);
MarkedTuple marked_tuple_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ComponentReport& c);
ComponentReport component_from_json(const nlohmann::json& j);

nlohmann::json sheets_document(const HurwitzSpec& spec, const std::vector<MarkedTuple>& sheets);
nlohmann::json report_document(const HurwitzSpec& spec, std::size_t sheet_count,
                               const std::vector<ComponentReport>& components);
nlohmann::json verify_document(const VerifySummary& summary);

std::string sheets_text(const HurwitzSpec& spec, const std::vector<MarkedTuple>& sheets);
std::string sheets_csv(const std::vector<MarkedTuple>& sheets);

/// verbosity >= 1 adds the sheet permutations restricted to each component.
std::string report_text(const HurwitzSpec& spec, std::size_t sheet_count,
                        const std::vector<ComponentReport>& components, int verbosity);
std::string report_csv(const std::vector<ComponentReport>& components);

std::string verify_text(const VerifySummary& summary);

}  // namespace hurmono

#endif  // HURMONO_REPORT_IO_HPP
