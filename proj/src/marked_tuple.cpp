#include "hurmono/marked_tuple.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hurmono/error.hpp"

namespace hurmono {

namespace {

void guard_canonical(int degree, int fibers) {
  if (degree > kMaxCanonicalDegree || fibers > kMaxFibers) {
    throw GuardExceeded("instance too large: canonical forms require d <= " +
                        std::to_string(kMaxCanonicalDegree) + " and m <= " + std::to_string(kMaxFibers));
  }
}

void check_shape(const MarkedTuple& t) {
  if (t.perms.empty()) throw Error("marked tuple has no fibers");
  if (t.markings.size() != t.perms.size()) throw Error("marked tuple needs one marking per fiber");
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    if (t.perms[i].degree() != t.degree() || t.markings[i].degree() != t.degree()) {
      throw Error("degree mismatch");
    }
  }
}

// Minimum of each cycle, in canonical cycle order, 0-indexed.
std::vector<std::uint8_t> canonical_cycle_reps(const Permutation& p) {
  std::vector<std::uint8_t> reps;
  for (const Cycle& c : p.cycles().cycles) reps.push_back(static_cast<std::uint8_t>(c.front() - 1));
  return reps;
}

// Flat sort key of any tuple: images, then labels in canonical cycle order.
std::vector<int> flat_key(const MarkedTuple& t) {
  std::vector<int> key;
  for (const Permutation& p : t.perms) {
    for (int x = 0; x < p.degree(); ++x) key.push_back(p.at0(x));
  }
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    for (std::uint8_t r : canonical_cycle_reps(t.perms[i])) key.push_back(t.markings[i].raw(r));
  }
  return key;
}

std::string profile_list(const std::vector<Partition>& profiles) {
  std::string out;
  for (std::size_t i = 0; i < profiles.size();) {
    std::size_t j = i;
    while (j < profiles.size() && profiles[j] == profiles[i]) ++j;
    if (!out.empty()) out += ',';
    out += profiles[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Marking

Marking Marking::from_cycle_labels(const Permutation& sigma, const std::map<int, int>& labels) {
  Marking m;
  m.degree_ = static_cast<std::uint8_t>(sigma.degree());
  const CycleDecomposition cd = sigma.cycles();
  if (labels.size() != cd.cycles.size()) throw Error("marking must label every cycle exactly once");
  for (const Cycle& c : cd.cycles) {
    auto it = labels.find(c.front());
    if (it == labels.end()) throw Error("marking has no label for cycle through " + std::to_string(c.front()));
    if (it->second < 1 || it->second > static_cast<int>(cd.cycles.size())) throw Error("marking label out of range");
    for (int a : c) m.labels_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(it->second);
  }
  return m;
}

Marking Marking::from_point_labels(std::span<const int> labels) {
  if (labels.empty() || labels.size() > static_cast<std::size_t>(kMaxDegree)) throw Error("bad marking size");
  Marking m;
  m.degree_ = static_cast<std::uint8_t>(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] < 1 || labels[x] > kMaxDegree) throw Error("marking label out of range");
    m.labels_[x] = static_cast<std::uint8_t>(labels[x]);
  }
  return m;
}

std::map<int, int> Marking::cycle_labels(const Permutation& sigma) const {
  std::map<int, int> out;
  for (const Cycle& c : sigma.cycles().cycles) out[c.front()] = label_of_point(c.front());
  return out;
}

bool Marking::valid_for(const Permutation& sigma, const Partition& mu) const {
  if (degree_ != sigma.degree() || mu.weight() != sigma.degree()) return false;
  const CycleDecomposition cd = sigma.cycles();
  if (static_cast<int>(cd.cycles.size()) != mu.length()) return false;
  std::vector<bool> used(cd.cycles.size() + 1, false);
  for (const Cycle& c : cd.cycles) {
    const int label = label_of_point(c.front());
    if (label < 1 || label > mu.length() || used[static_cast<std::size_t>(label)]) return false;
    used[static_cast<std::size_t>(label)] = true;
    if (mu[label - 1] != static_cast<int>(c.size())) return false;
    for (int a : c) {
      if (label_of_point(a) != label) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- HurwitzSpec

void HurwitzSpec::validate() const {
  if (degrees.length() == 0) throw Error("degrees must be a nonempty partition");
  if (genera.size() != static_cast<std::size_t>(degrees.length())) {
    throw Error("genera must have one entry per source component");
  }
  for (int g : genera) {
    if (g < 0) throw Error("genera must be nonnegative");
  }
  if (degree() > kMaxDegree) throw GuardExceeded("instance too large: degree above " + std::to_string(kMaxDegree));
  if (profiles.size() < 3) throw Error("at least 3 marked fibers are required");
  for (const Partition& mu : profiles) {
    if (mu.weight() != degree()) {
      throw Error("profile " + mu.to_string() + " is not a partition of " + std::to_string(degree()));
    }
  }
}

std::string HurwitzSpec::to_string() const {
  std::string out = "degrees=" + degrees.to_csv() + " genera=";
  for (std::size_t i = 0; i < genera.size(); ++i) out += (i ? "," : "") + std::to_string(genera[i]);
  out += " profiles=";
  for (std::size_t i = 0; i < profiles.size(); ++i) out += (i ? ";" : "") + profiles[i].to_csv();
  return out;
}

std::string HurwitzSpec::display_name() const {
  std::string sub;
  if (degrees.length() == 1) {
    sub = std::to_string(degrees[0]) + "," + std::to_string(genera.at(0));
  } else {
    sub = degrees.to_string() + ",(";
    for (std::size_t i = 0; i < genera.size(); ++i) sub += (i ? "," : "") + std::to_string(genera[i]);
    sub += ")";
  }
  return "H_{" + sub + "}(" + profile_list(profiles) + ")";
}

Partition parse_degrees(std::string_view text) { return Partition::parse(text); }

std::vector<int> parse_genera(std::string_view text) {
  std::vector<int> genera;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token(text.substr(pos, comma - pos));
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 6) {
      throw Error("malformed genus list '" + std::string(text) + "'");
    }
    genera.push_back(std::stoi(token));
    pos = comma + 1;
  }
  return genera;
}

std::vector<Partition> parse_profiles(std::string_view text) {
  std::vector<Partition> profiles;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = std::min(text.find(';', pos), text.size());
    std::string_view token = text.substr(pos, semi - pos);
    int repeat = 1;
    if (std::size_t caret = token.find('^'); caret != std::string_view::npos) {
      const std::string count(token.substr(caret + 1));
      if (count.empty() || count.find_first_not_of("0123456789 ") != std::string::npos || count.size() > 3) {
        throw Error("malformed exponent in profile '" + std::string(token) + "'");
      }
      repeat = std::stoi(count);
      if (repeat < 1) throw Error("profile exponent must be positive");
      token = token.substr(0, caret);
    }
    const Partition mu = Partition::parse(token);
    for (int r = 0; r < repeat; ++r) profiles.push_back(mu);
    pos = semi + 1;
  }
  return profiles;
}

ComponentSignature ComponentSignature::expected(const HurwitzSpec& spec) {
  ComponentSignature s;
  for (int i = 0; i < spec.degrees.length(); ++i) {
    s.parts.emplace_back(spec.degrees[i], spec.genera.at(static_cast<std::size_t>(i)));
  }
  std::sort(s.parts.begin(), s.parts.end());
  return s;
}

// ----------------------------------------------------------- MarkedTuple

bool MarkedTuple::satisfies(const HurwitzSpec& spec) const {
  if (fibers() != spec.fibers() || markings.size() != perms.size() || degree() != spec.degree()) return false;
  for (int i = 0; i < fibers(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (perms[idx].degree() != degree()) return false;
    if (cycle_type(perms[idx]) != spec.profiles[idx]) return false;
    if (!markings[idx].valid_for(perms[idx], spec.profiles[idx])) return false;
  }
  return product(perms).is_identity();
}

std::string MarkedTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += " | ";
    bool first = true;
    for (const Cycle& c : perms[i].cycles().cycles) {
      if (!first) out += ' ';
      first = false;
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + std::to_string(c[k]);
      out += ")^" + std::to_string(markings[i].label_of_point(c.front()));
    }
  }
  return out;
}

MarkedTuple MarkedTuple::parse(std::string_view text) {
  struct Fiber {
    std::vector<Cycle> cycles;
    std::vector<int> labels;
  };
  std::vector<Fiber> fibers(1);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error("malformed marked tuple at offset " + std::to_string(i) + ": " + what);
  };
  auto read_int = [&] {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1000) fail("number too large");
    }
    return v;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '|') {
      fibers.emplace_back();
      ++i;
    } else if (ch == '(') {
      ++i;
      Cycle c;
      for (;;) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == ')') break;
        c.push_back(read_int());
      }
      ++i;
      if (i >= text.size() || text[i] != '^') fail("expected '^label' after cycle");
      ++i;
      fibers.back().cycles.push_back(std::move(c));
      fibers.back().labels.push_back(read_int());
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  MarkedTuple t;
  int degree = 0;
  for (const Cycle& c : fibers.front().cycles) degree += static_cast<int>(c.size());
  for (const Fiber& f : fibers) {
    if (f.cycles.empty()) fail("empty fiber");
    Permutation p = Permutation::from_cycles(degree, f.cycles);
    int points = 0;
    std::map<int, int> labels;
    for (std::size_t k = 0; k < f.cycles.size(); ++k) {
      points += static_cast<int>(f.cycles[k].size());
      labels[*std::min_element(f.cycles[k].begin(), f.cycles[k].end())] = f.labels[k];
    }
    if (points != degree) fail("every fiber must list all points");
    t.markings.push_back(Marking::from_cycle_labels(p, labels));
    t.perms.push_back(p);
  }
  return t;
}

std::strong_ordering compare(const MarkedTuple& a, const MarkedTuple& b) {
  return flat_key(a) <=> flat_key(b);
}

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::zero: return "zero";
    case Boundary::one: return "one";
    case Boundary::infty: return "infty";
  }
  return "?";
}

// ------------------------------------------------------------ operations

std::vector<Marking> enumerate_markings(const Permutation& p, const Partition& mu) {
  if (cycle_type(p) != mu) throw Error("cycle type of " + p.to_string() + " is not " + mu.to_string());
  const std::vector<Cycle> cycles = p.cycles().cycles;
  std::vector<int> assigned(cycles.size(), 0);
  std::vector<bool> used(cycles.size() + 1, false);
  std::vector<Marking> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cycles.size()) {
      std::map<int, int> labels;
      for (std::size_t c = 0; c < cycles.size(); ++c) labels[cycles[c].front()] = assigned[c];
      out.push_back(Marking::from_cycle_labels(p, labels));
      return;
    }
    for (int label = 1; label <= mu.length(); ++label) {
      if (used[static_cast<std::size_t>(label)] || mu[label - 1] != static_cast<int>(cycles[k].size())) continue;
      used[static_cast<std::size_t>(label)] = true;
      assigned[k] = label;
      self(self, k + 1);
      used[static_cast<std::size_t>(label)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

MarkedTuple transport_fibers(std::span<const Permutation> conjugators, const MarkedTuple& t) {
  check_shape(t);
  if (conjugators.size() != t.perms.size()) throw Error("need one conjugator per fiber");
  MarkedTuple out;
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    const Permutation& w = conjugators[i];
    out.perms.push_back(conjugate(w, t.perms[i]));
    std::vector<int> labels(static_cast<std::size_t>(t.degree()));
    for (int x = 0; x < t.degree(); ++x) labels[w.at0(x)] = t.markings[i].raw(x);
    out.markings.push_back(Marking::from_point_labels(labels));
  }
  return out;
}

MarkedTuple transport_marking(const Permutation& w, const MarkedTuple& t) {
  const std::vector<Permutation> ws(t.perms.size(), w);
  return transport_fibers(ws, t);
}

MarkedTuple canonicalize(const MarkedTuple& t) {
  check_shape(t);
  guard_canonical(t.degree(), t.fibers());
  return Canonizer(t.perms).canonical(t.markings);
}

ComponentSignature component_signature(std::span<const Permutation> perms) {
  ComponentSignature sig;
  for (const std::vector<int>& orbit : orbits(perms)) {
    const int n = static_cast<int>(orbit.size());
    int ramification = 0;
    for (const Permutation& p : perms) {
      // Sum of (|c| - 1) over cycles inside the orbit = n - #cycles.
      int cycles = 0;
      for (int x : orbit) {
        int y = p(x);
        int smallest = x;
        while (y != x) {
          smallest = std::min(smallest, y);
          y = p(y);
        }
        if (smallest == x) ++cycles;
      }
      ramification += n - cycles;
    }
    if (ramification % 2 != 0 || 2 - 2 * n + ramification < 0) {
      throw InvariantViolation("orbit genus is not a nonnegative integer; product is not the identity");
    }
    sig.parts.emplace_back(n, (2 - 2 * n + ramification) / 2);
  }
  std::sort(sig.parts.begin(), sig.parts.end());
  return sig;
}

Permutation node_product(const MarkedTuple& t, Boundary b) {
  if (t.fibers() != 4) throw Unsupported("node products require exactly 4 marked fibers");
  const Permutation& s1 = t.perms[0];
  const Permutation& s2 = t.perms[1];
  const Permutation& s3 = t.perms[2];
  const Permutation& s4 = t.perms[3];
  switch (b) {
    case Boundary::infty:
      return compose(s3, s4);
    case Boundary::one:
      return compose(s2, conjugate(s3, s4));
    case Boundary::zero:
      return compose(s1, conjugate(s2, conjugate(s3, s4)));
  }
  throw InvariantViolation("unknown boundary");
}

// -------------------------------------------------------------- Canonizer

Canonizer::Canonizer(std::span<const Permutation> perms) : degree_(perms.empty() ? 0 : perms.front().degree()) {
  const int m = static_cast<int>(perms.size());
  if (m == 0) throw Error("canonical form of an empty tuple");
  for (const Permutation& p : perms) {
    if (p.degree() != degree_) throw Error("degree mismatch");
  }
  guard_canonical(degree_, m);
  const int d = degree_;
  const std::size_t len = static_cast<std::size_t>(m * d);

  std::array<std::uint8_t, kMaxFibers * kMaxCanonicalDegree> best{};
  std::array<std::uint8_t, kMaxFibers * kMaxCanonicalDegree> cand{};
  bool have_best = false;
  for (const Permutation& w : symmetric_group(d)) {
    std::array<std::uint8_t, kMaxCanonicalDegree> winv{};
    for (int x = 0; x < d; ++x) winv[w.at0(x)] = static_cast<std::uint8_t>(x);
    // -1: candidate below best so far, 0: equal prefix, 1: above (abandon).
    int state = have_best ? 0 : -1;
    std::size_t pos = 0;
    for (int i = 0; i < m && state <= 0; ++i) {
      const Permutation& s = perms[static_cast<std::size_t>(i)];
      for (int y = 0; y < d; ++y, ++pos) {
        const std::uint8_t v = w.at0(s.at0(winv[static_cast<std::size_t>(y)]));
        cand[pos] = v;
        if (state == 0) {
          if (v < best[pos]) {
            state = -1;
          } else if (v > best[pos]) {
            state = 1;
            break;
          }
        }
      }
    }
    if (state == -1) {
      std::copy(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(len), best.begin());
      have_best = true;
      conjugators_.clear();
      conjugators_.push_back(w);
    } else if (state == 0) {
      conjugators_.push_back(w);
    }
  }

  for (int i = 0; i < m; ++i) {
    Permutation::Images img{};
    for (int x = 0; x < d; ++x) img[static_cast<std::size_t>(x)] = best[static_cast<std::size_t>(i * d + x)];
    canonical_.push_back(Permutation::from_raw(d, img));
    cycle_reps_.push_back(canonical_cycle_reps(canonical_.back()));
  }
  for (const Permutation& w : conjugators_) {
    Permutation::Images inv{};
    for (int x = 0; x < d; ++x) inv[w.at0(x)] = static_cast<std::uint8_t>(x);
    inverse_conjugators_.push_back(inv);
  }
  image_key_.images = best;
}

TupleKey Canonizer::key(std::span<const Marking> markings) const {
  if (markings.size() != canonical_.size()) throw Error("need one marking per fiber");
  TupleKey result = image_key_;
  auto& best = result.labels;
  std::array<std::uint8_t, kMaxFibers * kMaxCanonicalDegree> cand{};
  bool have_best = false;
  for (const Permutation::Images& winv : inverse_conjugators_) {
    // The label of the transported cycle through r is the old label at w^-1(r).
    int state = have_best ? 0 : -1;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < cycle_reps_.size() && state <= 0; ++i) {
      for (std::uint8_t r : cycle_reps_[i]) {
        const std::uint8_t v = markings[i].raw(winv[r]);
        cand[pos] = v;
        if (state == 0) {
          if (v < best[pos]) {
            state = -1;
          } else if (v > best[pos]) {
            state = 1;
            break;
          }
        }
        ++pos;
      }
    }
    if (state == -1) {
      std::copy(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(pos), best.begin());
      have_best = true;
    }
  }
  return result;
}

MarkedTuple Canonizer::canonical(std::span<const Marking> markings) const {
  return tuple_from_key(key(markings), degree_, static_cast<int>(canonical_.size()));
}

TupleKey key_of(const MarkedTuple& t) {
  check_shape(t);
  guard_canonical(t.degree(), t.fibers());
  TupleKey key;
  const std::vector<int> flat = flat_key(t);
  const std::size_t images = static_cast<std::size_t>(t.degree() * t.fibers());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    (k < images ? key.images[k] : key.labels[k - images]) = static_cast<std::uint8_t>(flat[k]);
  }
  return key;
}

MarkedTuple tuple_from_key(const TupleKey& key, int degree, int fibers) {
  guard_canonical(degree, fibers);
  MarkedTuple t;
  std::size_t label_pos = 0;
  for (int i = 0; i < fibers; ++i) {
    Permutation::Images img{};
    for (int x = 0; x < degree; ++x) img[static_cast<std::size_t>(x)] = key.images[static_cast<std::size_t>(i * degree + x)];
    const Permutation p = Permutation::from_raw(degree, img);
    std::map<int, int> labels;
    for (std::uint8_t r : canonical_cycle_reps(p)) labels[r + 1] = key.labels[label_pos++];
    t.markings.push_back(Marking::from_cycle_labels(p, labels));
    t.perms.push_back(p);
  }
  return t;
}

}  // namespace hurmono
