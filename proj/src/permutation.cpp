#include "hurmono/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "hurmono/error.hpp"

namespace hurmono {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error("permutation degree must lie in 1.." + std::to_string(kMaxDegree));
  }
}

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch");
}

// Cycles with 0-indexed points, unsorted, each starting at its minimum.
std::vector<Cycle> raw_cycles(const Permutation& p) {
  std::vector<Cycle> out;
  std::array<bool, kMaxDegree> seen{};
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    Cycle c;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p.at0(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  Images img{};
  std::iota(img.begin(), img.begin() + degree, std::uint8_t{0});
  return from_raw(degree, img);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int degree = static_cast<int>(images.size());
  check_degree(degree);
  Images img{};
  std::array<bool, kMaxDegree> hit{};
  for (int x = 0; x < degree; ++x) {
    const int y = images[static_cast<std::size_t>(x)];
    if (y < 1 || y > degree || hit[static_cast<std::size_t>(y - 1)]) {
      throw Error("image list is not a bijection of {1.." + std::to_string(degree) + "}");
    }
    hit[static_cast<std::size_t>(y - 1)] = true;
    img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y - 1);
  }
  return from_raw(degree, img);
}

Permutation Permutation::from_cycles(int degree, const std::vector<Cycle>& cycles) {
  Permutation p = identity(degree);
  std::array<bool, kMaxDegree> used{};
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || a > degree) throw Error("cycle entry " + std::to_string(a) + " out of range");
      if (used[static_cast<std::size_t>(a - 1)]) throw Error("cycles are not disjoint");
      used[static_cast<std::size_t>(a - 1)] = true;
      const int b = c[(i + 1) % c.size()];
      p.img_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    Cycle c;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw Error("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error("unexpected character in permutation '" + std::string(text) + "'");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxDegree) throw Error("cycle entry out of range");
        ++i;
      }
      c.push_back(value);
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int x = 0; x < degree_; ++x) out[static_cast<std::size_t>(x)] = img_[static_cast<std::size_t>(x)] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree_; ++x) {
    if (img_[static_cast<std::size_t>(x)] != x) return false;
  }
  return true;
}

CycleDecomposition Permutation::cycles() const {
  CycleDecomposition out{degree_, raw_cycles(*this)};
  for (Cycle& c : out.cycles) {
    for (int& a : c) ++a;
  }
  std::stable_sort(out.cycles.begin(), out.cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

std::string Permutation::to_string() const {
  // Cycles in order of their minimum reads more naturally than canonical order.
  std::string out;
  for (const Cycle& c : raw_cycles(*this)) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation rebuild(const CycleDecomposition& cycles) {
  return Permutation::from_cycles(cycles.degree, cycles.cycles);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  Permutation::Images img{};
  for (int x = 0; x < p.degree(); ++x) img[static_cast<std::size_t>(x)] = p.at0(q.at0(x));
  return Permutation::from_raw(p.degree(), img);
}

Permutation inverse(const Permutation& p) {
  Permutation::Images img{};
  for (int x = 0; x < p.degree(); ++x) img[p.at0(x)] = static_cast<std::uint8_t>(x);
  return Permutation::from_raw(p.degree(), img);
}

Permutation conjugate(const Permutation& w, const Permutation& p) {
  check_same_degree(w, p);
  // (w p w^-1)(w(x)) = w(p(x))
  Permutation::Images img{};
  for (int x = 0; x < p.degree(); ++x) img[w.at0(x)] = w.at0(p.at0(x));
  return Permutation::from_raw(p.degree(), img);
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const Cycle& c : raw_cycles(p)) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

Permutation product(std::span<const Permutation> perms) {
  if (perms.empty()) throw Error("product of an empty tuple");
  Permutation acc = perms.front();
  for (std::size_t i = 1; i < perms.size(); ++i) acc = compose(acc, perms[i]);
  return acc;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> perms) {
  if (perms.empty()) throw Error("orbits of an empty tuple: degree undefined");
  const int d = perms.front().degree();
  std::array<int, kMaxDegree> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Permutation& p : perms) {
    if (p.degree() != d) throw Error("degree mismatch");
    for (int x = 0; x < d; ++x) {
      const int a = find(x);
      const int b = find(p.at0(x));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::array<int, kMaxDegree> slot{};
  slot.fill(-1);
  for (int x = 0; x < d; ++x) {
    const int r = find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x + 1);
  }
  return out;
}

const std::vector<Permutation>& symmetric_group(int degree) {
  if (degree < 1 || degree > 9) throw GuardExceeded("instance too large: S_d tables require d <= 9");
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<Permutation> all;
  Permutation::Images img{};
  std::iota(img.begin(), img.begin() + degree, std::uint8_t{0});
  do {
    all.push_back(Permutation::from_raw(degree, img));
  } while (std::next_permutation(img.begin(), img.begin() + degree));
  return cache.emplace(degree, std::move(all)).first->second;
}

const std::vector<Permutation>& conjugacy_class(const Partition& type) {
  const std::vector<Permutation>& all = symmetric_group(type.weight());
  static std::mutex mutex;
  static std::map<Partition, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  std::vector<Permutation> members;
  for (const Permutation& p : all) {
    if (cycle_type(p) == type) members.push_back(p);
  }
  return cache.emplace(type, std::move(members)).first->second;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace hurmono
