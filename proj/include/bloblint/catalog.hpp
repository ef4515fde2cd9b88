#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bloblint/errors.hpp"

namespace bloblint {

// Toolkits are open-ended strings ("swing", "swt", "javafx" built in) so
// extension files can add new toolkits without recompiling.
struct HandlerMethodSpec {
  std::string name;
  std::string event_type;  // simple name, e.g. "ActionEvent"
};

struct ListenerSpec {
  std::string toolkit;
  std::string qualified_name;
  std::vector<HandlerMethodSpec> methods;

  std::string simple_name() const {
    auto pos = qualified_name.rfind('.');
    return pos == std::string::npos ? qualified_name : qualified_name.substr(pos + 1);
  }
  const HandlerMethodSpec* method(const std::string& name) const {
    for (const auto& m : methods)
      if (m.name == name) return &m;
    return nullptr;
  }
  bool matches_name(const std::string& name) const {
    return name == qualified_name || name == simple_name();
  }
};

struct RegistrationSpec {
  std::string method;
  const ListenerSpec* listener = nullptr;
};

struct IdentitySpec {
  std::string setter;
  std::string getter;
};

struct WidgetSpec {
  std::string toolkit;
  std::string qualified_name;
  std::vector<RegistrationSpec> registrations;
  std::vector<IdentitySpec> identities;

  std::string simple_name() const {
    auto pos = qualified_name.rfind('.');
    return pos == std::string::npos ? qualified_name : qualified_name.substr(pos + 1);
  }
  bool matches_name(const std::string& name) const {
    return name == qualified_name || name == simple_name();
  }
  const RegistrationSpec* registration(const std::string& method) const {
    for (const auto& r : registrations)
      if (r.method == method) return &r;
    return nullptr;
  }
};

class Catalog {
 public:
  // All listener interfaces matching a simple or qualified type name.
  std::vector<const ListenerSpec*> listener_candidates(const std::string& name) const;
  // First match, or null; the classic single-answer lookup.
  const ListenerSpec* listener_by_name(const std::string& name) const;
  // Adapter class name -> implemented listener interface.
  const ListenerSpec* adapter_interface(const std::string& name) const;
  const WidgetSpec* widget_by_name(const std::string& name) const;

  bool is_registration_method(const std::string& method) const {
    return registration_index_.count(method) > 0;
  }
  std::vector<const ListenerSpec*> registration_targets(const std::string& method) const;

  bool is_identity_setter(const std::string& name) const { return identity_setters_.count(name) > 0; }
  // getSource is treated as a universal identity getter.
  bool is_identity_getter(const std::string& name) const {
    return name == "getSource" || identity_getters_.count(name) > 0;
  }

  const std::deque<ListenerSpec>& listeners() const { return listeners_; }
  const std::deque<WidgetSpec>& widgets() const { return widgets_; }

  // Parses catalog directives from `text` and merges them in. Throws
  // CatalogError on malformed or duplicate entries.
  void merge(const std::string& text, const std::string& origin);

 private:
  std::deque<ListenerSpec> listeners_;
  std::deque<WidgetSpec> widgets_;
  std::map<std::string, const ListenerSpec*> adapters_;
  std::map<std::string, std::set<const ListenerSpec*>> registration_index_;
  std::set<std::string> identity_setters_;
  std::set<std::string> identity_getters_;
};

// The embedded Swing/SWT/JavaFX defaults.
Catalog builtin_catalog();

// Builtins plus an optional extension file ("" for none).
Catalog load_catalog(const std::string& extension_path);

}  // namespace bloblint
