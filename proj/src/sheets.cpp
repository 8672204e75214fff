#include "hurmono/sheets.hpp"

#include <algorithm>

#include "hurmono/error.hpp"
#include "hurmono/parallel.hpp"

namespace hurmono {

namespace {

void sort_unique(std::vector<TupleKey>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

// Emits the canonical key of every marking of one identity-product tuple.
void emit_marked_classes(const std::vector<Permutation>& perms, const std::vector<Partition>& profiles,
                         std::vector<TupleKey>& out) {
  const Canonizer canon(perms);
  std::vector<std::vector<Marking>> choices;
  for (std::size_t i = 0; i < perms.size(); ++i) choices.push_back(enumerate_markings(perms[i], profiles[i]));

  std::vector<TupleKey> local;
  std::vector<std::size_t> odometer(perms.size(), 0);
  std::vector<Marking> current(perms.size());
  for (;;) {
    for (std::size_t i = 0; i < perms.size(); ++i) current[i] = choices[i][odometer[i]];
    local.push_back(canon.key(current));
    std::size_t i = 0;
    while (i < odometer.size() && ++odometer[i] == choices[i].size()) odometer[i++] = 0;
    if (i == odometer.size()) break;
  }
  sort_unique(local);
  out.insert(out.end(), local.begin(), local.end());
}

}  // namespace

std::vector<TupleKey> enumerate_sheet_keys(const HurwitzSpec& spec, const EnumerationOptions& options) {
  spec.validate();
  const int d = spec.degree();
  const int m = spec.fibers();
  if (d > kMaxCanonicalDegree || m > kMaxFibers) {
    throw GuardExceeded("instance too large: enumeration supports d <= " + std::to_string(kMaxCanonicalDegree) +
                        " and m <= " + std::to_string(kMaxFibers));
  }
  const ComponentSignature wanted = ComponentSignature::expected(spec);

  std::vector<const std::vector<Permutation>*> classes;
  for (int i = 0; i < m - 1; ++i) classes.push_back(&conjugacy_class(spec.profiles[static_cast<std::size_t>(i)]));
  // Every class of tuples meets the slice where the first permutation is a
  // fixed representative, and canonical forms minimize over all of S_d.
  std::vector<Permutation> first = *classes[0];
  if (options.symmetry_reduction) first.resize(1);
  const std::vector<Permutation>& second = *classes[1];
  const Partition& last_type = spec.profiles.back();

  const std::size_t items = first.size() * second.size();
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(options.threads)),
                                                             std::max<std::size_t>(items, 1)));
  std::vector<std::vector<TupleKey>> found(static_cast<std::size_t>(workers));

  parallel_for(items, workers, [&](std::size_t item, int worker) {
    std::vector<TupleKey>& out = found[static_cast<std::size_t>(worker)];
    std::vector<Permutation> perms(static_cast<std::size_t>(m));
    perms[0] = first[item / second.size()];
    perms[1] = second[item % second.size()];
    auto rec = [&](auto&& self, int fiber, const Permutation& prefix) -> void {
      if (fiber == m - 1) {
        Permutation closing = inverse(prefix);
        if (cycle_type(closing) != last_type) return;
        perms.back() = closing;
        if (options.match_signature && component_signature(perms) != wanted) return;
        emit_marked_classes(perms, spec.profiles, out);
        return;
      }
      for (const Permutation& p : *classes[static_cast<std::size_t>(fiber)]) {
        perms[static_cast<std::size_t>(fiber)] = p;
        self(self, fiber + 1, compose(prefix, p));
      }
    };
    rec(rec, 2, compose(perms[0], perms[1]));
    if (out.size() > (1u << 20)) sort_unique(out);
  });

  std::vector<TupleKey> merged;
  for (std::vector<TupleKey>& part : found) {
    merged.insert(merged.end(), part.begin(), part.end());
    std::vector<TupleKey>().swap(part);
  }
  sort_unique(merged);
  return merged;
}

std::vector<MarkedTuple> enumerate_sheets(const HurwitzSpec& spec, const EnumerationOptions& options) {
  const std::vector<TupleKey> keys = enumerate_sheet_keys(spec, options);
  std::vector<MarkedTuple> sheets;
  sheets.reserve(keys.size());
  for (const TupleKey& key : keys) sheets.push_back(tuple_from_key(key, spec.degree(), spec.fibers()));
  return sheets;
}

std::size_t count_sheets(const HurwitzSpec& spec, const EnumerationOptions& options) {
  return enumerate_sheet_keys(spec, options).size();
}

}  // namespace hurmono
