#pragma once

#include <map>
#include <string>
#include <vector>

#include "bloblint/commands.hpp"

namespace bloblint {

// One interactive-object declaration (field or local of a catalog widget
// type) with its usages, resolved identity properties, and registrations.
struct WidgetDecl {
  const VarDeclarator* var = nullptr;
  const TypeRef* type = nullptr;
  const WidgetSpec* spec = nullptr;
  const ClassDecl* owner_class = nullptr;  // null for locals
  const SourceFile* file = nullptr;
  bool is_field = false;
  const Node* init_method = nullptr;  // method/ctor with the `new` assignment
  std::vector<const Node*> usages;    // initialization statements referencing it
  // identity-property value -> the setter statements that install it
  std::map<std::string, std::vector<const Node*>> identity_properties;
  std::vector<RegistrationSite> registrations;  // project-wide

  std::string name() const { return var ? var->name : ""; }
};

std::vector<WidgetDecl> find_all_interactive_objects(const AnalysisContext& ctx);

// The WidgetDecl an expression resolves to, if any.
const WidgetDecl* widget_of_expr(const AnalysisContext& ctx, const std::vector<WidgetDecl>& widgets,
                                 const Node& expr);

}  // namespace bloblint
