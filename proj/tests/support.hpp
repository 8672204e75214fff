#ifndef HURMONO_TESTS_SUPPORT_HPP
#define HURMONO_TESTS_SUPPORT_HPP

#include "hurmono/marked_tuple.hpp"
#include "oracle.hpp"

namespace testing_support {

inline hurmono::HurwitzSpec spec_of(std::string_view degrees, std::string_view genera, std::string_view profiles) {
  hurmono::HurwitzSpec s{hurmono::parse_degrees(degrees), hurmono::parse_genera(genera),
                         hurmono::parse_profiles(profiles)};
  s.validate();
  return s;
}

inline oracle::Perm plain(const hurmono::Permutation& p) {
  oracle::Perm r;
  for (int x = 1; x <= p.degree(); ++x) r.push_back(p(x) - 1);
  return r;
}

inline oracle::Marked plain(const hurmono::MarkedTuple& t) {
  oracle::Marked r;
  for (int i = 0; i < t.fibers(); ++i) {
    const auto f = static_cast<std::size_t>(i);
    r.perms.push_back(plain(t.perms[f]));
    std::vector<int> lab;
    for (int x = 1; x <= t.degree(); ++x) lab.push_back(t.markings[f].label_of_point(x));
    r.labels.push_back(lab);
  }
  return r;
}

}  // namespace testing_support

#endif  // HURMONO_TESTS_SUPPORT_HPP
