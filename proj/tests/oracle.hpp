#ifndef HURMONO_TESTS_ORACLE_HPP
#define HURMONO_TESTS_ORACLE_HPP

// Brute-force reference for small instances. Shares no code with the library:
// plain 0-indexed vectors, exhaustive S_d, pairwise equivalence search.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm& p, const Perm& q) {  // p after q
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

inline Perm ident(int d) {
  Perm r(static_cast<std::size_t>(d));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm p = ident(d);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    for (int y = static_cast<int>(x); !seen[static_cast<std::size_t>(y)]; y = p[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      c.push_back(y);
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<int> type_of(const Perm& p) {
  std::vector<int> t;
  for (const auto& c : cycles_of(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

// A marking is the label of the cycle through each point.
struct Marked {
  std::vector<Perm> perms;
  std::vector<std::vector<int>> labels;
  bool operator==(const Marked&) const = default;
};

inline std::vector<std::vector<int>> markings_of(const Perm& p, const std::vector<int>& mu) {
  const auto cs = cycles_of(p);
  std::vector<int> order(cs.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  // Every bijection cycles -> labels, kept when lengths agree.
  do {
    bool ok = true;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (static_cast<int>(cs[k].size()) != mu[static_cast<std::size_t>(order[k])]) ok = false;
    }
    if (!ok) continue;
    std::vector<int> lab(p.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      for (int x : cs[k]) lab[static_cast<std::size_t>(x)] = order[k] + 1;
    }
    out.push_back(lab);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline Marked transport(const Perm& w, const Marked& t) {
  Marked r;
  const Perm wi = inv(w);
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    r.perms.push_back(mul(w, mul(t.perms[i], wi)));
    std::vector<int> lab(w.size());
    for (std::size_t x = 0; x < w.size(); ++x) lab[static_cast<std::size_t>(w[x])] = t.labels[i][x];
    r.labels.push_back(lab);
  }
  return r;
}

inline bool equivalent(const Marked& a, const Marked& b, const std::vector<Perm>& group) {
  return std::any_of(group.begin(), group.end(), [&](const Perm& w) { return transport(w, a) == b; });
}

// Sorted (orbit size, genus) pairs.
inline std::vector<std::pair<int, int>> signature(const std::vector<Perm>& perms) {
  const std::size_t d = perms.front().size();
  std::vector<int> comp(d, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < d; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Perm& p : perms) {
        for (int y : {p[static_cast<std::size_t>(x)], inv(p)[static_cast<std::size_t>(x)]}) {
          if (comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = ncomp;
            stack.push_back(y);
          }
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < ncomp; ++c) {
    int n = 0;
    int ram = 0;
    for (std::size_t x = 0; x < d; ++x) n += comp[x] == c;
    for (const Perm& p : perms) {
      for (const auto& cyc : cycles_of(p)) {
        if (comp[static_cast<std::size_t>(cyc.front())] == c) ram += static_cast<int>(cyc.size()) - 1;
      }
    }
    out.emplace_back(n, 1 - n + ram / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sort key: images, then labels listed over cycles sorted by (length desc, min asc).
inline std::vector<int> key(const Marked& t) {
  std::vector<int> k;
  for (const Perm& p : t.perms) k.insert(k.end(), p.begin(), p.end());
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    auto cs = cycles_of(t.perms[i]);
    for (auto& c : cs) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
    });
    for (const auto& c : cs) k.push_back(t.labels[i][static_cast<std::size_t>(c.front())]);
  }
  return k;
}

inline Marked min_form(const Marked& t, const std::vector<Perm>& group) {
  Marked best = t;
  for (const Perm& w : group) {
    Marked c = transport(w, t);
    if (key(c) < key(best)) best = c;
  }
  return best;
}

struct ClassInfo {
  Marked rep;
  std::vector<std::pair<int, int>> signature;
};

// One representative per simultaneous-conjugacy class, by pairwise search.
inline std::vector<ClassInfo> classes(int d, const std::vector<std::vector<int>>& profiles) {
  const std::vector<Perm> group = all_perms(d);
  const std::size_t m = profiles.size();
  std::vector<ClassInfo> reps;
  std::vector<Perm> perms(m);
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& prefix) {
    if (i == m - 1) {
      perms[i] = inv(prefix);
      if (type_of(perms[i]) != profiles[i]) return;
      std::vector<std::vector<std::vector<int>>> options;
      for (std::size_t f = 0; f < m; ++f) options.push_back(markings_of(perms[f], profiles[f]));
      std::vector<std::size_t> pick(m, 0);
      const auto sig = signature(perms);
      for (;;) {
        Marked t{perms, {}};
        for (std::size_t f = 0; f < m; ++f) t.labels.push_back(options[f][pick[f]]);
        bool seen = false;
        for (const ClassInfo& r : reps) {
          if (r.signature == sig && equivalent(t, r.rep, group)) {
            seen = true;
            break;
          }
        }
        if (!seen) reps.push_back({t, sig});
        std::size_t f = 0;
        while (f < m && ++pick[f] == options[f].size()) pick[f++] = 0;
        if (f == m) break;
      }
      return;
    }
    for (const Perm& p : group) {
      if (type_of(p) != profiles[i]) continue;
      perms[i] = p;
      rec(i + 1, mul(prefix, p));
    }
  };
  rec(0, ident(d));
  return reps;
}

}  // namespace oracle

#endif  // HURMONO_TESTS_ORACLE_HPP
