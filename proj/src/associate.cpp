#include "bloblint/associate.hpp"

#include <algorithm>
#include <set>

namespace bloblint {

namespace {

void add_widget(Association& assoc, const WidgetDecl* w, AssociationTechnique technique,
                bool ambiguous = false) {
  for (auto& existing : assoc.widgets)
    if (existing.widget == w) return;
  assoc.widgets.push_back({w, technique, ambiguous});
}

}  // namespace

const char* technique_name(AssociationTechnique t) {
  switch (t) {
    case AssociationTechnique::ReferenceComparison: return "reference";
    case AssociationTechnique::PropertyMatch: return "property";
    case AssociationTechnique::TypeOnly: return "type";
    case AssociationTechnique::RegistrationSite: return "registration";
  }
  return "?";
}

Association associate(const AnalysisContext& ctx, const Command& cmd,
                      const std::vector<WidgetDecl>& widgets) {
  const ListenerImpl& listener = *cmd.owner;

  // widgets that register this listener (call-node identity)
  std::set<const MethodCall*> listener_calls;
  for (const auto& site : listener.registrations) listener_calls.insert(site.call);
  std::set<const WidgetDecl*> registrants;
  for (const WidgetDecl& w : widgets)
    for (const auto& site : w.registrations)
      if (listener_calls.count(site.call)) registrants.insert(&w);

  Association assoc;
  if (cmd.identification) {
    for (const IdentificationAtom& atom : cmd.identification->atoms) {
      switch (atom.kind) {
        case IdentificationAtom::Kind::WidgetReference: {
          if (const WidgetDecl* w = widget_of_expr(ctx, widgets, *atom.comparator))
            add_widget(assoc, w, AssociationTechnique::ReferenceComparison);
          break;
        }
        case IdentificationAtom::Kind::PropertyValue: {
          if (atom.value.empty()) break;
          for (const WidgetDecl& w : widgets)
            if (w.identity_properties.count(atom.value))
              add_widget(assoc, &w, AssociationTechnique::PropertyMatch);
          break;
        }
        case IdentificationAtom::Kind::TypeCheck: {
          // type checks narrow among the listener's registrants only
          std::vector<const WidgetDecl*> of_type;
          for (const WidgetDecl* w : registrants)
            if (w->type && w->type->simple() == atom.type_name) of_type.push_back(w);
          for (const WidgetDecl* w : of_type)
            add_widget(assoc, w, AssociationTechnique::TypeOnly, of_type.size() > 1);
          break;
        }
        case IdentificationAtom::Kind::EventAttribute:
          break;
      }
    }
  } else if (listener.registrations.size() == 1) {
    // anonymous/lambda listeners: the registration names the widget directly
    const RegistrationSite& site = listener.registrations.front();
    if (site.widget_expr)
      if (const WidgetDecl* w = widget_of_expr(ctx, widgets, *site.widget_expr))
        add_widget(assoc, w, AssociationTechnique::RegistrationSite);
  }

  // final cross-check against the registering widgets, when those are known
  if (!registrants.empty()) {
    Association checked;
    for (const auto& w : assoc.widgets)
      if (registrants.count(w.widget)) checked.widgets.push_back(w);
    return checked;
  }
  return assoc;
}

}  // namespace bloblint
