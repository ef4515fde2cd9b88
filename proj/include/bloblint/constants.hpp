#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "bloblint/project.hpp"

namespace bloblint {

// String constants resolvable at analysis time: final String fields with a
// single literal initializer that are never reassigned.
class ConstantTable {
 public:
  void add(const std::string& class_name, const std::string& field, const std::string& value) {
    qualified_[class_name + "." + field] = value;
    auto [it, inserted] = by_field_.emplace(field, value);
    if (!inserted && it->second != value) ambiguous_.emplace(field);
  }

  // `context_class` disambiguates unqualified names.
  std::optional<std::string> lookup(const std::string& context_class,
                                    const std::string& name) const {
    if (auto it = qualified_.find(context_class + "." + name); it != qualified_.end())
      return it->second;
    if (auto it = qualified_.find(name); it != qualified_.end()) return it->second;
    if (auto it = by_field_.find(name); it != by_field_.end() && !ambiguous_.count(name))
      return it->second;
    return std::nullopt;
  }

  std::size_t size() const { return qualified_.size(); }
  const std::map<std::string, std::string>& entries() const { return qualified_; }

 private:
  std::map<std::string, std::string> qualified_;  // "Class.FIELD" or "Class.Nested.FIELD"
  std::map<std::string, std::string> by_field_;
  std::set<std::string> ambiguous_;
};

ConstantTable resolve_constants(const Project& project);

}  // namespace bloblint
