#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tjurina/errors.hpp"

namespace tjurina {

// Ordered list of distinct variable names.  The position of a name in the
// list is the variable index used by monomials, and it also fixes the
// graded-reverse-lexicographic order used for canonical printing.
//
// VarSets are immutable and shared by value semantics through
// std::shared_ptr<const VarSet>; extending a set (fresh helper variables,
// chart variables) always appends at the end so existing indices and
// exponent vectors stay valid.
class VarSet {
 public:
  using Ptr = std::shared_ptr<const VarSet>;

  static Ptr make(std::vector<std::string> names) {
    return Ptr(new VarSet(std::move(names)));
  }

  int size() const { return static_cast<int>(names_.size()); }

  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  // New VarSet with `extra` appended.  Rejects duplicates.
  Ptr extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return make(std::move(all));
  }

  // Name of the form `stem`, `stem_`, `stem__`, ... not present in the set.
  std::string fresh_name(std::string stem) const {
    while (contains(stem)) stem += "_";
    return stem;
  }

  bool operator==(const VarSet& other) const { return names_ == other.names_; }
  bool operator!=(const VarSet& other) const { return !(*this == other); }

 private:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw DomainError("empty variable name");
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw DomainError("duplicate variable name: '" + names_[i] + "'");
    }
  }

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Polynomials from different construction paths may carry distinct VarSet
// objects with identical content; treat those as the same ring.
inline bool same_vars(const VarSet::Ptr& a, const VarSet::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace tjurina
