#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "naive.hpp"
#include "sbaf/framework.hpp"
#include "sbaf/io/framework_file.hpp"
#include "sbaf/verify/fixtures.hpp"

namespace testing_support {

inline sbaf::Sbaf fx(const char* name) { return sbaf::verify::fixture(name); }
inline sbaf::Sbaf parse(std::string_view text) { return sbaf::io::parse_framework(text); }

inline naive::Ids ids(const sbaf::Sbaf& sb, const sbaf::ArgSet& e) {
  const auto v = sb.ids(e);
  return {v.begin(), v.end()};
}

inline naive::Ids ids(const sbaf::Sbaf& sb, const sbaf::SentSet& s) {
  const auto v = sb.sentence_ids(s);
  return {v.begin(), v.end()};
}

template <typename Set>
naive::Family family(const sbaf::Sbaf& sb, const std::vector<Set>& sets) {
  naive::Family out;
  for (const auto& e : sets) out.insert(ids(sb, e));
  return out;
}

inline naive::Family family(const sbaf::Baf& baf, const std::vector<sbaf::ArgSet>& sets) {
  naive::Family out;
  for (const auto& e : sets) {
    const auto v = baf.ids(e);
    out.insert({v.begin(), v.end()});
  }
  return out;
}

using F = std::initializer_list<std::initializer_list<const char*>>;

inline naive::Family fam(F sets) {
  naive::Family out;
  for (const auto& s : sets) {
    naive::Ids e;
    for (const char* x : s) e.insert(x);
    out.insert(e);
  }
  return out;
}

inline naive::Ids set_of(std::initializer_list<const char*> xs) {
  naive::Ids out;
  for (const char* x : xs) out.insert(x);
  return out;
}

}  // namespace testing_support
