#pragma once

#include <string>
#include <vector>

#include "bloblint/catalog.hpp"
#include "bloblint/project.hpp"

namespace bloblint {

enum class ListenerKind { Class, Anonymous, Lambda };

const char* listener_kind_name(ListenerKind k);

struct Handler {
  const MethodDecl* method = nullptr;  // null for Lambda kind
  const Lambda* lambda = nullptr;      // set for Lambda kind
  std::string name;                    // handler method name per the spec
  std::string event_param;
  const Node* body = nullptr;  // Block, or the expression of an expression lambda
};

struct RegistrationSite {
  const Node* widget_expr = nullptr;  // receiver of the registration call, may be null
  const MethodCall* call = nullptr;
  const SourceFile* file = nullptr;
};

// One detected UI listener: a (class, interface) pair, an anonymous class at
// a registration site, or a lambda at a registration site. Handlers with
// empty bodies are dropped; listeners with no remaining handlers are not
// reported at all.
struct ListenerImpl {
  ListenerKind kind = ListenerKind::Class;
  const ListenerSpec* spec = nullptr;
  const ClassDecl* owner = nullptr;  // enclosing class; the class itself for Class kind
  const New* anon = nullptr;
  const Lambda* lambda = nullptr;
  const SourceFile* file = nullptr;
  std::vector<Handler> handlers;
  std::vector<RegistrationSite> registrations;
  std::string id;  // "Class#Interface", "anon@<line>#Interface", "lambda@<line>#Interface"
  int line = 0;    // declaration line

  const Node* decl_node() const {
    if (kind == ListenerKind::Anonymous) return anon;
    if (kind == ListenerKind::Lambda) return lambda;
    return owner;
  }
};

std::vector<ListenerImpl> find_ui_listeners(const Project& project, const Catalog& catalog);

// All registration call sites whose listener argument resolves (by name,
// `this`, or `new C()`) to the given listener class.
std::vector<RegistrationSite> find_registrations(const Project& project, const Catalog& catalog,
                                                 const ListenerImpl& listener);

}  // namespace bloblint
