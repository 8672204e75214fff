#include "hurmono/report_io.hpp"

#include <sstream>

#include "hurmono/error.hpp"

namespace hurmono {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) { return p.parts(); }

Partition partition_from(const json& j) { return Partition(j.get<std::vector<int>>()); }

std::vector<std::vector<int>> shift(const std::vector<std::vector<int>>& lists, int by) {
  std::vector<std::vector<int>> out = lists;
  for (auto& l : out) {
    for (int& x : l) x += by;
  }
  return out;
}

std::string space_separated(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) out += (i ? " " : "") + std::to_string(p.parts()[i]);
  return out;
}

std::string sheet_cycles(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i] + 1);
    out += ')';
  }
  return out;
}

const char* boundary_symbol(Boundary b) {
  switch (b) {
    case Boundary::zero: return "0";
    case Boundary::one: return "1";
    case Boundary::infty: return "inf";
  }
  return "?";
}

}  // namespace

json to_json(const HurwitzSpec& spec) {
  json profiles = json::array();
  for (const Partition& mu : spec.profiles) profiles.push_back(partition_json(mu));
  return {{"name", spec.display_name()},
          {"degrees", partition_json(spec.degrees)},
          {"genera", spec.genera},
          {"profiles", profiles}};
}

HurwitzSpec spec_from_json(const json& j) {
  HurwitzSpec spec;
  spec.degrees = partition_from(j.at("degrees"));
  spec.genera = j.at("genera").get<std::vector<int>>();
  for (const json& mu : j.at("profiles")) spec.profiles.push_back(partition_from(mu));
  spec.validate();
  return spec;
}

json to_json(const MarkedTuple& t) {
  json fibers = json::array();
  for (int i = 0; i < t.fibers(); ++i) {
    json fiber = json::array();
    const auto idx = static_cast<std::size_t>(i);
    for (const Cycle& c : t.perms[idx].cycles().cycles) {
      fiber.push_back({{"cycle", c}, {"label", t.markings[idx].label_of_point(c.front())}});
    }
    fibers.push_back(std::move(fiber));
  }
  return fibers;
}

MarkedTuple marked_tuple_from_json(const json& j) {
  MarkedTuple t;
  for (const json& fiber : j) {
    std::vector<Cycle> cycles;
    std::map<int, int> labels;
    int degree = 0;
    for (const json& entry : fiber) {
      Cycle c = entry.at("cycle").get<Cycle>();
      if (c.empty()) throw Error("empty cycle in marked tuple JSON");
      degree += static_cast<int>(c.size());
      labels[*std::min_element(c.begin(), c.end())] = entry.at("label").get<int>();
      cycles.push_back(std::move(c));
    }
    const Permutation p = Permutation::from_cycles(degree, cycles);
    t.markings.push_back(Marking::from_cycle_labels(p, labels));
    t.perms.push_back(p);
  }
  return t;
}

json to_json(const ComponentReport& c) {
  json ram, nodes, cycles;
  for (Boundary b : kBoundaries) {
    const auto bi = static_cast<std::size_t>(b);
    ram[to_string(b)] = partition_json(c.ram[bi]);
    json profiles = json::array();
    for (const Partition& p : c.node_profiles[bi]) profiles.push_back(partition_json(p));
    nodes[to_string(b)] = profiles;
    cycles[to_string(b)] = shift(c.cycles[bi], 1);
  }
  std::vector<int> sheets = c.sheet_indices;
  for (int& k : sheets) ++k;
  return {{"degree", c.degree},
          {"genus", c.genus},
          {"sheets", sheets},
          {"ram", ram},
          {"node_profiles", nodes},
          {"cycles", cycles},
          {"loop_product_identity", c.loop_product_identity}};
}

ComponentReport component_from_json(const json& j) {
  ComponentReport c;
  c.degree = j.at("degree").get<int>();
  c.genus = j.at("genus").get<int>();
  c.sheet_indices = j.at("sheets").get<std::vector<int>>();
  for (int& k : c.sheet_indices) --k;
  for (Boundary b : kBoundaries) {
    const auto bi = static_cast<std::size_t>(b);
    c.ram[bi] = partition_from(j.at("ram").at(to_string(b)));
    for (const json& p : j.at("node_profiles").at(to_string(b))) c.node_profiles[bi].push_back(partition_from(p));
    c.cycles[bi] = shift(j.at("cycles").at(to_string(b)).get<std::vector<std::vector<int>>>(), -1);
  }
  c.loop_product_identity = j.at("loop_product_identity").get<bool>();
  return c;
}

json sheets_document(const HurwitzSpec& spec, const std::vector<MarkedTuple>& sheets) {
  json list = json::array();
  for (const MarkedTuple& t : sheets) list.push_back(to_json(t));
  return {{"schema_version", kSchemaVersion}, {"spec", to_json(spec)}, {"count", sheets.size()}, {"sheets", list}};
}

json report_document(const HurwitzSpec& spec, std::size_t sheet_count,
                     const std::vector<ComponentReport>& components) {
  json list = json::array();
  for (const ComponentReport& c : components) list.push_back(to_json(c));
  return {{"schema_version", kSchemaVersion},
          {"spec", to_json(spec)},
          {"sheet_count", sheet_count},
          {"components", list}};
}

json verify_document(const VerifySummary& summary) {
  json rows = json::array();
  auto tallies = [](const std::vector<ComponentTally>& ts) {
    json out = json::array();
    for (const ComponentTally& t : ts) {
      out.push_back({{"count", t.count}, {"genus", t.genus}, {"degree", t.degree ? json(*t.degree) : json(nullptr)}});
    }
    return out;
  };
  for (const RowVerdict& v : summary.rows) {
    rows.push_back({{"spec", to_json(v.row.spec)},
                    {"citation", v.row.citation},
                    {"line", v.row.line},
                    {"pass", v.pass},
                    {"sheet_count", v.sheet_count},
                    {"expected", tallies(v.row.expected)},
                    {"computed", tallies(v.computed)}});
  }
  return {{"schema_version", kSchemaVersion}, {"passed", summary.passed}, {"failed", summary.failed}, {"rows", rows}};
}

std::string sheets_text(const HurwitzSpec& spec, const std::vector<MarkedTuple>& sheets) {
  std::ostringstream out;
  out << "space: " << spec.display_name() << '\n';
  out << "sheets: " << sheets.size() << '\n';
  for (std::size_t k = 0; k < sheets.size(); ++k) out << "Sheet" << k + 1 << ": " << sheets[k].to_string() << '\n';
  return out.str();
}

std::string sheets_csv(const std::vector<MarkedTuple>& sheets) {
  std::ostringstream out;
  out << "sheet,fiber,cycle,label\n";
  for (std::size_t k = 0; k < sheets.size(); ++k) {
    const MarkedTuple& t = sheets[k];
    for (int i = 0; i < t.fibers(); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      for (const Cycle& c : t.perms[idx].cycles().cycles) {
        out << k + 1 << ',' << i + 1 << ',';
        for (std::size_t a = 0; a < c.size(); ++a) out << (a ? " " : "") << c[a];
        out << ',' << t.markings[idx].label_of_point(c.front()) << '\n';
      }
    }
  }
  return out.str();
}

std::string report_text(const HurwitzSpec& spec, std::size_t sheet_count,
                        const std::vector<ComponentReport>& components, int verbosity) {
  std::ostringstream out;
  out << "space: " << spec.display_name() << '\n';
  out << "sheets: " << sheet_count << '\n';
  out << "components: " << components.size() << '\n';
  for (std::size_t i = 0; i < components.size(); ++i) {
    const ComponentReport& c = components[i];
    out << "component " << i + 1 << ": degree " << c.degree << ", genus " << c.genus << '\n';
    for (Boundary b : kBoundaries) {
      const auto bi = static_cast<std::size_t>(b);
      out << "  over " << boundary_symbol(b) << ": ram " << c.ram[bi].to_string() << ", nodes ";
      for (std::size_t k = 0; k < c.node_profiles[bi].size(); ++k) {
        out << (k ? " " : "") << c.node_profiles[bi][k].to_string();
      }
      out << '\n';
      if (verbosity >= 1) out << "    s_" << to_string(b) << " = " << sheet_cycles(c.cycles[bi]) << '\n';
    }
    if (verbosity >= 1) out << "  s_zero s_one s_infty = id: " << (c.loop_product_identity ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string report_csv(const std::vector<ComponentReport>& components) {
  std::ostringstream out;
  out << "component,degree,genus,ram_zero,ram_one,ram_infty\n";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const ComponentReport& c = components[i];
    out << i + 1 << ',' << c.degree << ',' << c.genus;
    for (Boundary b : kBoundaries) out << ',' << space_separated(c.ram_over(b));
    out << '\n';
  }
  return out.str();
}

std::string verify_text(const VerifySummary& summary) {
  std::ostringstream out;
  for (const RowVerdict& v : summary.rows) {
    out << (v.pass ? "PASS  " : "FAIL  ") << v.row.spec.display_name() << "  " << to_string(v.computed);
    if (!v.row.degrees_asserted()) out << "  (degrees unasserted)";
    out << '\n';
    if (!v.pass) {
      out << "      row:      " << v.row.citation << " (line " << v.row.line << ")\n";
      out << "      expected: " << to_string(v.row.expected) << '\n';
      out << "      computed: " << to_string(v.computed) << " from " << v.sheet_count << " sheets\n";
    }
  }
  out << summary.passed << '/' << summary.passed + summary.failed << " pass\n";
  return out.str();
}

}  // namespace hurmono
