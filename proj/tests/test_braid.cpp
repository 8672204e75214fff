#include "doctest.h"

#include <numeric>
#include <set>

#include "hurmono/braid.hpp"
#include "hurmono/error.hpp"
#include "support.hpp"

using namespace hurmono;
using testing_support::spec_of;

namespace {

Permutation inv(const Permutation& p) { return inverse(p); }

// Word-level form of each move, written out without the conjugator helper.
std::vector<Permutation> raw_move(const MarkedTuple& t, Boundary b) {
  const Permutation& s1 = t.perms[0];
  const Permutation& s2 = t.perms[1];
  const Permutation& s3 = t.perms[2];
  const Permutation& s4 = t.perms[3];
  auto word = [](std::initializer_list<Permutation> ps) { return product(std::vector<Permutation>(ps)); };
  switch (b) {
    case Boundary::infty:
      return {s1, s2, word({s3, s4, s3, inv(s4), inv(s3)}), word({s3, s4, inv(s3)})};
    case Boundary::one: {
      const Permutation w2 = word({s2, s3, s4, inv(s3)});
      const Permutation w4 = word({inv(s3), s2, s3});
      return {s1, word({w2, s2, inv(w2)}), s3, word({w4, s4, inv(w4)})};
    }
    case Boundary::zero: {
      const Permutation w1 = word({s1, s2, s3, s4, inv(s3), inv(s2)});
      const Permutation w4 = word({inv(s3), inv(s2), s1, s2, s3});
      return {word({w1, s1, inv(w1)}), s2, s3, word({w4, s4, inv(w4)})};
    }
  }
  return {};
}

void check_riemann_hurwitz(const ComponentReport& c) {
  int ram = 0;
  for (const Partition& p : c.ram) {
    CHECK(p.weight() == c.degree);
    ram += p.ramification();
  }
  CHECK(2 * c.genus - 2 == -2 * c.degree + ram);
}

}  // namespace

TEST_CASE("moves match their word formulas and keep the tuple valid") {
  for (const HurwitzSpec& s : {spec_of("4", "0", "2,2;3,1;2,1,1;2,1,1"), spec_of("4", "1", "4;4;3,1;1,1,1,1"),
                               spec_of("3", "0", "2,1^4"), spec_of("1,1,1", "0,0,0", "1,1,1^4")}) {
    for (const MarkedTuple& t : enumerate_sheets(s)) {
      for (Boundary b : kBoundaries) {
        const MarkedTuple moved = move(t, b);
        CHECK(moved.perms == raw_move(t, b));
        CHECK(moved.satisfies(s));
        CHECK(component_signature(moved) == component_signature(t));
        CHECK(node_product(moved, b) == node_product(t, b));
        const auto w = move_conjugators(t, b);
        CHECK(transport_fibers(w, t) == moved);
      }
      CHECK(move(t, Boundary::zero) == move_zero(t));
      CHECK(move(t, Boundary::one) == move_one(t));
      CHECK(move(t, Boundary::infty) == move_infty(t));
    }
  }
}

TEST_CASE("moves commute with simultaneous conjugation") {
  const HurwitzSpec s = spec_of("4", "0", "2,2;3,1;2,1,1;2,1,1");
  const auto& group = symmetric_group(4);
  for (const MarkedTuple& t : enumerate_sheets(s)) {
    for (std::size_t k = 0; k < group.size(); k += 5) {
      for (Boundary b : kBoundaries) {
        CHECK(move(transport_marking(group[k], t), b) == transport_marking(group[k], move(t, b)));
      }
    }
  }
}

TEST_CASE("sheet graph actions are permutations") {
  const SheetGraph g = build_sheet_graph(spec_of("4", "1", "4;4;3,1;1,1,1,1"));
  REQUIRE(g.sheets.size() == 24);
  for (Boundary b : kBoundaries) {
    const auto& a = g.action(b);
    REQUIRE(a.size() == g.sheets.size());
    CHECK(std::set<int>(a.begin(), a.end()).size() == a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(canonicalize(move(g.sheets[k], b)) == g.sheets[static_cast<std::size_t>(a[k])]);
    }
  }
}

TEST_CASE("components of the example spaces") {
  struct Case {
    HurwitzSpec spec;
    std::vector<std::pair<int, int>> degree_genus;
  };
  const std::vector<Case> cases{
      {spec_of("4", "1", "4;4;3,1;1,1,1,1"), {{24, 3}}},
      {spec_of("4", "0", "3,1;3,1;3,1;1,1,1,1"), {{12, 1}, {12, 1}}},
      {spec_of("4", "2", "4;4;2,2;3,1"), {{6, 0}}},
      {spec_of("4", "0", "2,2;3,1;2,1,1;2,1,1"), {{24, 1}}},
      {spec_of("5", "3", "5;5;4,1;4,1"), {{2, 0}, {4, 0}, {4, 0}, {30, 1}, {32, 3}}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.spec.to_string());
    const SheetGraph g = build_sheet_graph(c.spec);
    const auto comps = components(g);
    std::vector<std::pair<int, int>> got;
    std::vector<int> seen;
    for (const ComponentReport& r : comps) {
      got.emplace_back(r.degree, r.genus);
      check_riemann_hurwitz(r);
      CHECK(static_cast<int>(r.sheet_indices.size()) == r.degree);
      seen.insert(seen.end(), r.sheet_indices.begin(), r.sheet_indices.end());
      for (Boundary b : kBoundaries) {
        std::vector<int> lengths;
        for (const auto& cyc : r.cycles[static_cast<std::size_t>(b)]) lengths.push_back(static_cast<int>(cyc.size()));
        CHECK(Partition(lengths) == r.ram_over(b));
        CHECK(r.node_profiles[static_cast<std::size_t>(b)].size() == lengths.size());
      }
    }
    CHECK(got == c.degree_genus);
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(g.sheets.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(seen == all);
  }
}

TEST_CASE("loop product flag") {
  const auto comps = components(build_sheet_graph(spec_of("4", "1", "4;4;3,1;1,1,1,1")));
  REQUIRE(comps.size() == 1);
  const SheetGraph g = build_sheet_graph(spec_of("4", "1", "4;4;3,1;1,1,1,1"));
  bool identity = true;
  for (std::size_t k = 0; k < g.sheets.size(); ++k) {
    const int after = g.action(Boundary::zero)[static_cast<std::size_t>(
        g.action(Boundary::one)[static_cast<std::size_t>(g.action(Boundary::infty)[k])])];
    identity = identity && after == static_cast<int>(k);
  }
  CHECK(comps[0].loop_product_identity == identity);
}

TEST_CASE("empty and unsupported graphs") {
  const SheetGraph g = build_sheet_graph(spec_of("2", "0", "2^4"));
  CHECK(g.sheets.empty());
  CHECK(components(g).empty());
  CHECK_THROWS_AS(build_sheet_graph(spec_of("3", "0", "2,1^5;1,1,1")), Unsupported);
}
