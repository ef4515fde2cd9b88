#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bloblint/constants.hpp"
#include "bloblint/listeners.hpp"

namespace bloblint {

// Shared inputs for the analysis passes.
struct AnalysisContext {
  const Project& project;
  const Catalog& catalog;
  const ConstantTable& constants;
};

// Local names whose values derive from the handler's event parameter,
// computed by a flow-insensitive def-use fixpoint over locals.
class EventTaint {
 public:
  static EventTaint compute(const Node& body, const std::string& event_param);
  bool tainted(const std::string& name) const { return names_.count(name) > 0; }
  bool expr_tainted(const Node& expr) const;

 private:
  std::set<std::string> names_;
  std::set<std::string> locals_;
};

enum class IdentificationVariant {
  PropertyComparison,
  TypeCheck,
  ReferenceComparison,
  SwitchCase,
};

const char* variant_name(IdentificationVariant v);

// One recognized comparison inside an anchor condition.
struct IdentificationAtom {
  enum class Kind { WidgetReference, PropertyValue, TypeCheck, EventAttribute };
  Kind kind;
  const Node* comparator = nullptr;
  std::string value;      // resolved string for PropertyValue
  std::string getter;     // event getter feeding the comparison, if known
  std::string type_name;  // for TypeCheck
};

struct SourceObjectIdentification {
  const Node* anchor = nullptr;  // IfStmt or SwitchCase
  IdentificationVariant variant = IdentificationVariant::PropertyComparison;
  const Node* event_expr = nullptr;
  std::vector<IdentificationAtom> atoms;
  // Enclosing event-dependent conditionals, outermost first, anchor last.
  std::vector<const Node*> guard_chain;
  // Enclosing conditionals that do not read the event; preserved on rewrite.
  std::vector<const Node*> wrap_conds;
  bool widget_identifying = false;
  bool under_non_event_conditional = false;
};

struct DispatchMethod {
  const MethodDecl* method = nullptr;
  int event_arg_position = -1;
  const MethodCall* call = nullptr;
};

struct Command {
  const ListenerImpl* owner = nullptr;
  int handler_index = 0;
  std::optional<SourceObjectIdentification> identification;  // absent => whole-body
  std::vector<const Node*> main_stmts;  // source order; includes attached bare-else stmts
  std::vector<const Node*> sliced_before;
  std::vector<const Node*> sliced_after;
  std::vector<const MethodDecl*> dispatch_chain;
  const Node* body_root = nullptr;  // body the statements live in (handler or dispatch)
  std::string event_param;          // event parameter name within body_root

  bool whole_body() const { return !identification.has_value(); }
  const Node* anchor() const { return identification ? identification->anchor : nullptr; }
};

// All if nodes and switch cases in the body, in source order, nested included.
std::vector<const Node*> find_conditionals(const Node& body);

// Keeps the conditionals whose governing condition reads the event parameter
// directly or through a local def-use chain. For a switch case that is the
// switch scrutinee.
std::vector<const Node*> filter_event_dependent(const std::vector<const Node*>& conds,
                                                const EventTaint& taint);

struct AnchorSelection {
  std::vector<SourceObjectIdentification> anchors;  // source order
  // Bare else / default statements attached to an anchor's command.
  std::map<const Node*, std::vector<const Node*>> attached;
};

// Innermost event-dependent conditionals; sibling branches each yield their
// own anchor.
AnchorSelection select_command_anchors(const AnalysisContext& ctx, const Node& body,
                                       const EventTaint& taint);

// Project-local methods invoked from `body` with the event (or an attribute
// of it) as an argument.
std::vector<DispatchMethod> find_dispatch_methods(const AnalysisContext& ctx, const Node& body,
                                                  const EventTaint& taint,
                                                  const ClassDecl* owner);

// Main statements plus backward/forward slices for one selected anchor.
Command extract_command(const AnalysisContext& ctx, const SourceObjectIdentification& ident,
                        const std::vector<const Node*>& attached, const Node& body_root,
                        const std::string& event_param);

// Algorithm entry point: commands of every non-empty handler of `listener`,
// dispatch methods expanded up to `dispatch_depth`.
std::vector<Command> detect_commands(const AnalysisContext& ctx, const ListenerImpl& listener,
                                     int dispatch_depth = 3);

// Identifier names mentioned by a subtree (variable uses, field names, opaque
// tokens; method call names excluded).
std::set<std::string> mentioned_names(const Node& n);

// Local variable names defined by a statement (declarators and assignment
// targets, nested included).
std::set<std::string> defined_names(const Node& stmt);

}  // namespace bloblint
