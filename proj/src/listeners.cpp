#include "bloblint/listeners.hpp"

#include <algorithm>
#include <set>

namespace bloblint {

namespace {

bool body_is_empty(const Node* body) {
  if (!body) return true;
  if (const auto* block = as<Block>(body)) return block->stmts.empty();
  return false;  // expression lambda bodies count as non-empty
}

bool import_covers(const SourceFile& file, const std::string& qualified) {
  if (!file.tree.root) return false;
  for (const Node* imp_node : file.tree.root->imports) {
    const auto* imp = as<ImportDecl>(imp_node);
    if (!imp) continue;
    if (imp->is_star) {
      auto dot = qualified.rfind('.');
      if (dot != std::string::npos && imp->path == qualified.substr(0, dot)) return true;
    } else if (imp->path == qualified) {
      return true;
    }
  }
  return false;
}

// Methods of `members` implementing handler methods of `spec`.
std::vector<Handler> collect_handlers(const std::vector<Node*>& members,
                                      const ListenerSpec& spec) {
  std::vector<Handler> out;
  for (const Node* m : members) {
    const auto* method = as<MethodDecl>(m);
    if (!method || method->params.size() != 1 || !method->body) continue;
    const HandlerMethodSpec* hm = spec.method(method->name);
    if (!hm) continue;
    if (body_is_empty(method->body)) continue;
    Handler h;
    h.method = method;
    h.name = method->name;
    h.event_param = method->params[0]->name;
    h.body = method->body;
    out.push_back(h);
  }
  return out;
}

// How well a spec's handler signatures match the declared methods; used to
// disambiguate simple names shared across toolkits (MouseListener, ...).
int spec_match_score(const std::vector<Node*>& members, const ListenerSpec& spec,
                     const SourceFile& file) {
  int score = 0;
  for (const Node* m : members) {
    const auto* method = as<MethodDecl>(m);
    if (!method || method->params.size() != 1) continue;
    const HandlerMethodSpec* hm = spec.method(method->name);
    if (!hm) continue;
    score += 2;
    if (method->params[0]->type && method->params[0]->type->simple() == hm->event_type)
      score += 1;
  }
  if (import_covers(file, spec.qualified_name)) score += 100;
  return score;
}

const ListenerSpec* pick_spec(const std::vector<const ListenerSpec*>& candidates,
                              const std::vector<Node*>& members, const SourceFile& file) {
  const ListenerSpec* best = nullptr;
  int best_score = -1;
  for (const ListenerSpec* c : candidates) {
    int score = spec_match_score(members, *c, file);
    if (score > best_score) {
      best = c;
      best_score = score;
    }
  }
  return best;
}

// Listener interfaces a class implements: its own implements clause, adapter
// superclasses, and interfaces inherited through project-local superclasses.
void collect_class_specs(const Project& project, const Catalog& catalog,
                         const ClassDecl& cls, const SourceFile& file,
                         std::vector<const ListenerSpec*>& out, int depth = 0) {
  if (depth > 8) return;
  for (const TypeRef* iface : cls.implements) {
    auto candidates = catalog.listener_candidates(iface->name);
    if (candidates.empty()) continue;
    const ListenerSpec* spec = pick_spec(candidates, cls.members, file);
    if (spec && std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
  }
  if (cls.extends) {
    if (const ListenerSpec* adapted = catalog.adapter_interface(cls.extends->name)) {
      if (std::find(out.begin(), out.end(), adapted) == out.end()) out.push_back(adapted);
    } else if (const ClassInfo* super = project.find_class(cls.extends->simple())) {
      if (super->decl != &cls)
        collect_class_specs(project, catalog, *super->decl, *super->file, out, depth + 1);
    }
  }
}

// True if `arg` names an instance of `cls` (this, typed variable, or new C()).
bool arg_names_class(const Project& project, const Node& arg, const ClassDecl& cls) {
  if (const auto* id = as<Identifier>(&arg)) {
    if (id->name == "this") return project.enclosing_class(arg) == &cls;
  }
  if (const auto* nw = as<New>(&arg))
    return !nw->is_anon && nw->type && nw->type->simple() == cls.name;
  if (const TypeRef* t = declared_type(project, arg)) return t->simple() == cls.name;
  return false;
}

}  // namespace

const char* listener_kind_name(ListenerKind k) {
  switch (k) {
    case ListenerKind::Class: return "class";
    case ListenerKind::Anonymous: return "anonymous";
    case ListenerKind::Lambda: return "lambda";
  }
  return "?";
}

std::vector<RegistrationSite> find_registrations(const Project& project, const Catalog& catalog,
                                                 const ListenerImpl& listener) {
  std::vector<RegistrationSite> sites;
  if (!listener.owner) return sites;
  for (const auto& file : project.files) {
    walk(*file->tree.root, [&](const Node& n) {
      const auto* call = as<MethodCall>(&n);
      if (!call || !catalog.is_registration_method(call->name)) return;
      // the registration must target this listener's interface
      auto targets = catalog.registration_targets(call->name);
      if (std::find(targets.begin(), targets.end(), listener.spec) == targets.end()) return;
      for (const Node* arg : call->args) {
        if (arg_names_class(project, *arg, *listener.owner)) {
          sites.push_back({call->receiver, call, file.get()});
          break;
        }
      }
    });
  }
  return sites;
}

std::vector<ListenerImpl> find_ui_listeners(const Project& project, const Catalog& catalog) {
  std::vector<ListenerImpl> out;

  for (const auto& file : project.files) {
    walk(*file->tree.root, [&](const Node& n) {
      // --- listener classes ---------------------------------------------
      if (const auto* cls = as<ClassDecl>(&n)) {
        std::vector<const ListenerSpec*> specs;
        collect_class_specs(project, catalog, *cls, *file, specs);
        for (const ListenerSpec* spec : specs) {
          ListenerImpl impl;
          impl.kind = ListenerKind::Class;
          impl.spec = spec;
          impl.owner = cls;
          impl.file = file.get();
          impl.handlers = collect_handlers(cls->members, *spec);
          if (impl.handlers.empty()) continue;  // empty listeners are excluded
          impl.line = file->line_of(cls->span.begin);
          impl.id = cls->name + "#" + spec->simple_name();
          out.push_back(std::move(impl));
        }
        return;
      }
      // --- anonymous classes at registration sites ------------------------
      if (const auto* nw = as<New>(&n); nw && nw->is_anon && nw->type) {
        std::vector<const ListenerSpec*> candidates = catalog.listener_candidates(nw->type->name);
        if (candidates.empty()) {
          if (const ListenerSpec* adapted = catalog.adapter_interface(nw->type->name))
            candidates.push_back(adapted);
        }
        if (candidates.empty()) return;
        const ListenerSpec* spec = pick_spec(candidates, nw->anon_members, *file);
        const auto* call = as<MethodCall>(nw->parent);
        if (!call || !catalog.is_registration_method(call->name) ||
            std::find(call->args.begin(), call->args.end(), nw) == call->args.end())
          return;  // not at a registration site
        ListenerImpl impl;
        impl.kind = ListenerKind::Anonymous;
        impl.spec = spec;
        impl.owner = project.enclosing_class(*nw);
        impl.anon = nw;
        impl.file = file.get();
        impl.handlers = collect_handlers(nw->anon_members, *spec);
        if (impl.handlers.empty()) return;
        impl.registrations.push_back({call->receiver, call, file.get()});
        impl.line = file->line_of(nw->span.begin);
        impl.id = "anon@" + std::to_string(impl.line) + "#" + spec->simple_name();
        out.push_back(std::move(impl));
        return;
      }
      // --- lambdas at registration sites -----------------------------------
      if (const auto* lam = as<Lambda>(&n)) {
        const auto* call = as<MethodCall>(lam->parent);
        if (!call || !catalog.is_registration_method(call->name) ||
            std::find(call->args.begin(), call->args.end(), lam) == call->args.end())
          return;
        if (lam->params.size() != 1) return;
        auto targets = catalog.registration_targets(call->name);
        if (targets.empty()) return;
        const ListenerSpec* spec = targets.front();
        if (call->receiver) {
          // refine through the receiver's declared widget type
          if (const TypeRef* rt = declared_type(project, *call->receiver)) {
            if (const WidgetSpec* w = catalog.widget_by_name(rt->name)) {
              if (const RegistrationSpec* r = w->registration(call->name)) spec = r->listener;
            }
          }
        }
        if (body_is_empty(lam->body)) return;
        ListenerImpl impl;
        impl.kind = ListenerKind::Lambda;
        impl.spec = spec;
        impl.owner = project.enclosing_class(*lam);
        impl.lambda = lam;
        impl.file = file.get();
        Handler h;
        h.lambda = lam;
        h.name = spec->methods.front().name;
        h.event_param = lam->params[0]->name;
        h.body = lam->body;
        impl.handlers.push_back(h);
        impl.registrations.push_back({call->receiver, call, file.get()});
        impl.line = file->line_of(lam->span.begin);
        impl.id = "lambda@" + std::to_string(impl.line) + "#" + spec->simple_name();
        out.push_back(std::move(impl));
        return;
      }
    });
  }

  // cross-file registration resolution for listener classes
  for (ListenerImpl& impl : out) {
    if (impl.kind == ListenerKind::Class)
      impl.registrations = find_registrations(project, catalog, impl);
  }
  return out;
}

}  // namespace bloblint
