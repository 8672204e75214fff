#include "hurmono/braid.hpp"

#include <algorithm>
#include <tuple>

#include "hurmono/error.hpp"
#include "hurmono/parallel.hpp"

namespace hurmono {

namespace {

void require_four(const MarkedTuple& t) {
  if (t.fibers() != 4) throw Unsupported("monodromy requires exactly 4 marked fibers");
}

}  // namespace

std::array<Permutation, 4> move_conjugators(const MarkedTuple& t, Boundary b) {
  require_four(t);
  const Permutation& s1 = t.perms[0];
  const Permutation& s2 = t.perms[1];
  const Permutation& s3 = t.perms[2];
  const Permutation& s4 = t.perms[3];
  const Permutation e = Permutation::identity(t.degree());
  switch (b) {
    case Boundary::infty:
      return {e, e, compose(s3, s4), s3};
    case Boundary::one: {
      const Permutation s3i = inverse(s3);
      return {e, compose(compose(s2, s3), compose(s4, s3i)), e, compose(s3i, compose(s2, s3))};
    }
    case Boundary::zero: {
      const Permutation w = conjugate(s2, conjugate(s3, s4));
      const Permutation s12 = compose(s1, s2);
      const Permutation v = compose(inverse(compose(s2, s3)), compose(s12, s3));
      return {compose(s1, w), e, e, v};
    }
  }
  throw InvariantViolation("unknown boundary");
}

MarkedTuple move(const MarkedTuple& t, Boundary b) {
  const std::array<Permutation, 4> w = move_conjugators(t, b);
  return transport_fibers(w, t);
}

MarkedTuple move_infty(const MarkedTuple& t) { return move(t, Boundary::infty); }
MarkedTuple move_one(const MarkedTuple& t) { return move(t, Boundary::one); }
MarkedTuple move_zero(const MarkedTuple& t) { return move(t, Boundary::zero); }

SheetGraph build_sheet_graph(const HurwitzSpec& spec, const EnumerationOptions& options) {
  if (spec.fibers() != 4) throw Unsupported("monodromy requires exactly 4 marked fibers");
  SheetGraph g;
  g.spec = spec;
  const std::vector<TupleKey> keys = enumerate_sheet_keys(spec, options);
  g.sheets.reserve(keys.size());
  for (const TupleKey& key : keys) g.sheets.push_back(tuple_from_key(key, spec.degree(), spec.fibers()));
  for (auto& a : g.actions) a.assign(g.sheets.size(), -1);

  parallel_for(g.sheets.size(), options.threads, [&](std::size_t k, int) {
    for (Boundary b : kBoundaries) {
      const MarkedTuple moved = move(g.sheets[k], b);
      const TupleKey key = Canonizer(moved.perms).key(moved.markings);
      auto it = std::lower_bound(keys.begin(), keys.end(), key);
      if (it == keys.end() || *it != key) {
        throw InvariantViolation("move " + to_string(b) + " of sheet " + std::to_string(k + 1) +
                                 " left the sheet set");
      }
      g.actions[static_cast<std::size_t>(b)][k] = static_cast<int>(it - keys.begin());
    }
  });

  for (Boundary b : kBoundaries) {
    std::vector<bool> hit(g.sheets.size(), false);
    for (int image : g.action(b)) {
      if (hit[static_cast<std::size_t>(image)]) {
        throw InvariantViolation("move " + to_string(b) + " is not a bijection of the sheets");
      }
      hit[static_cast<std::size_t>(image)] = true;
    }
  }
  return g;
}

std::vector<ComponentReport> components(const SheetGraph& graph) {
  const std::size_t n = graph.sheets.size();
  std::vector<int> component_of(n, -1);
  std::vector<ComponentReport> out;

  for (std::size_t start = 0; start < n; ++start) {
    if (component_of[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    ComponentReport rep;
    std::vector<std::size_t> stack{start};
    component_of[start] = id;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      rep.sheet_indices.push_back(static_cast<int>(k));
      for (const auto& action : graph.actions) {
        const auto next = static_cast<std::size_t>(action[k]);
        if (component_of[next] < 0) {
          component_of[next] = id;
          stack.push_back(next);
        }
      }
    }
    std::sort(rep.sheet_indices.begin(), rep.sheet_indices.end());
    rep.degree = static_cast<int>(rep.sheet_indices.size());

    int ramification = 0;
    for (Boundary b : kBoundaries) {
      const auto bi = static_cast<std::size_t>(b);
      const std::vector<int>& action = graph.action(b);
      std::vector<bool> seen(n, false);
      std::vector<int> lengths;
      for (int k : rep.sheet_indices) {
        if (seen[static_cast<std::size_t>(k)]) continue;
        std::vector<int> cycle;
        for (int j = k; !seen[static_cast<std::size_t>(j)]; j = action[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          cycle.push_back(j);
        }
        lengths.push_back(static_cast<int>(cycle.size()));
        rep.node_profiles[bi].push_back(cycle_type(node_product(graph.sheets[static_cast<std::size_t>(k)], b)));
        rep.cycles[bi].push_back(std::move(cycle));
      }
      rep.ram[bi] = Partition(lengths);
      ramification += rep.ram[bi].ramification();
      std::sort(rep.node_profiles[bi].begin(), rep.node_profiles[bi].end());
    }
    // Riemann-Hurwitz over a genus-0 base: 2g - 2 = -2 deg + ramification.
    const int twice_genus = ramification - 2 * rep.degree + 2;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw InvariantViolation("component genus is not a nonnegative integer");
    }
    rep.genus = twice_genus / 2;

    rep.loop_product_identity = std::all_of(rep.sheet_indices.begin(), rep.sheet_indices.end(), [&](int k) {
      const int a = graph.action(Boundary::infty)[static_cast<std::size_t>(k)];
      const int b = graph.action(Boundary::one)[static_cast<std::size_t>(a)];
      return graph.action(Boundary::zero)[static_cast<std::size_t>(b)] == k;
    });
    out.push_back(std::move(rep));
  }

  std::sort(out.begin(), out.end(), [](const ComponentReport& a, const ComponentReport& b) {
    return std::tie(a.degree, a.genus, a.ram, a.sheet_indices) < std::tie(b.degree, b.genus, b.ram, b.sheet_indices);
  });
  return out;
}

}  // namespace hurmono
