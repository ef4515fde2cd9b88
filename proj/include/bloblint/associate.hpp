#pragma once

#include <vector>

#include "bloblint/widgets.hpp"

namespace bloblint {

enum class AssociationTechnique { ReferenceComparison, PropertyMatch, TypeOnly, RegistrationSite };

const char* technique_name(AssociationTechnique t);

struct WidgetAssociation {
  const WidgetDecl* widget = nullptr;
  AssociationTechnique technique = AssociationTechnique::RegistrationSite;
  bool ambiguous = false;  // TypeOnly with more than one registrant of the type
};

struct Association {
  std::vector<WidgetAssociation> widgets;

  bool empty() const { return widgets.empty(); }
  bool ambiguous() const {
    for (const auto& w : widgets)
      if (w.ambiguous) return true;
    return false;
  }
  std::vector<const WidgetDecl*> decls() const {
    std::vector<const WidgetDecl*> out;
    for (const auto& w : widgets) out.push_back(w.widget);
    return out;
  }
};

// The interactive objects a command is attributable to. Candidates from the
// anchor's comparisons (reference, property, type) or the single registration
// site of inline listeners, cross-checked against the widgets that register
// the command's listener. An empty result means no widget was found.
Association associate(const AnalysisContext& ctx, const Command& cmd,
                      const std::vector<WidgetDecl>& widgets);

}  // namespace bloblint
