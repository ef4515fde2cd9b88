#include "bloblint/widgets.hpp"

#include <algorithm>

namespace bloblint {

namespace {

bool is_simple_statement(const Node& n) {
  switch (n.kind) {
    case NodeKind::ExprStmt:
    case NodeKind::LocalVarDecl:
    case NodeKind::ReturnStmt:
    case NodeKind::Opaque:
      return true;
    default:
      return false;
  }
}

// Block-level statements under `scope` that mention `name`.
void collect_usages(const Node& scope, const std::string& name, std::vector<const Node*>& out) {
  walk(scope, [&](const Node& n) {
    if (const auto* block = as<Block>(&n)) {
      for (const Node* s : block->stmts)
        if (is_simple_statement(*s) && mentions_name(*s, name)) out.push_back(s);
    }
  });
}

// The method or constructor of `cls` whose body assigns `name = new ...`.
const Node* find_init_method(const ClassDecl& cls, const std::string& name) {
  for (const Node* m : cls.members) {
    const Node* body = nullptr;
    if (const auto* ctor = as<ConstructorDecl>(m)) body = ctor->body;
    if (const auto* method = as<MethodDecl>(m)) body = method->body;
    if (!body) continue;
    bool assigns_new = false;
    walk(*body, [&](const Node& n) {
      if (assigns_new) return;
      const auto* a = as<Assign>(&n);
      if (!a || !is<New>(a->value)) return;
      if (const auto* id = as<Identifier>(a->target); id && id->name == name) assigns_new = true;
      if (const auto* fa = as<FieldAccess>(a->target); fa && fa->name == name) assigns_new = true;
    });
    if (assigns_new) return m;
  }
  return nullptr;
}

}  // namespace

std::vector<WidgetDecl> find_all_interactive_objects(const AnalysisContext& ctx) {
  std::vector<WidgetDecl> out;
  for (const auto& file : ctx.project.files) {
    walk(*file->tree.root, [&](const Node& n) {
      const TypeRef* type = nullptr;
      const std::vector<VarDeclarator*>* vars = nullptr;
      bool is_field = false;
      if (const auto* f = as<FieldDecl>(&n)) {
        type = f->type;
        vars = &f->vars;
        is_field = true;
      } else if (const auto* d = as<LocalVarDecl>(&n)) {
        type = d->type;
        vars = &d->vars;
      } else {
        return;
      }
      const WidgetSpec* spec = type ? ctx.catalog.widget_by_name(type->name) : nullptr;
      if (!spec) return;
      for (const VarDeclarator* v : *vars) {
        WidgetDecl w;
        w.var = v;
        w.type = type;
        w.spec = spec;
        w.file = file.get();
        w.is_field = is_field;
        w.owner_class = is_field ? ctx.project.enclosing_class(n) : nullptr;
        out.push_back(std::move(w));
      }
    });
  }

  for (WidgetDecl& w : out) {
    // usage scope: the initializing method, else every method of the class
    if (w.is_field && w.owner_class) {
      w.init_method = find_init_method(*w.owner_class, w.name());
      if (w.init_method) {
        collect_usages(*w.init_method, w.name(), w.usages);
      } else {
        for (const Node* m : w.owner_class->members)
          if (is<MethodDecl>(m) || is<ConstructorDecl>(m)) collect_usages(*m, w.name(), w.usages);
      }
    } else if (!w.is_field) {
      if (const Node* method = ctx.project.enclosing_method(*w.var)) {
        w.init_method = method;
        collect_usages(*method, w.name(), w.usages);
      }
    }

    // identity properties from the usage statements
    for (const Node* stmt : w.usages) {
      walk(*stmt, [&](const Node& n) {
        const auto* call = as<MethodCall>(&n);
        if (!call || !call->receiver || call->args.size() != 1) return;
        if (!w.spec || !ctx.catalog.is_identity_setter(call->name)) return;
        bool has_setter = false;
        for (const auto& ident : w.spec->identities)
          if (ident.setter == call->name) has_setter = true;
        if (!has_setter) return;
        VarRef ref = resolve_var(ctx.project, *call->receiver);
        if (ref.var != w.var) return;
        std::string value;
        if (const auto* lit = as<StringLit>(call->args[0])) {
          value = lit->value;
        } else {
          const ClassDecl* cls = ctx.project.enclosing_class(*call);
          std::string key;
          if (const auto* id = as<Identifier>(call->args[0])) key = id->name;
          if (const auto* fa = as<FieldAccess>(call->args[0]))
            if (const auto* base = as<Identifier>(fa->base)) key = base->name + "." + fa->name;
          if (!key.empty())
            if (auto resolved = ctx.constants.lookup(cls ? cls->name : "", key)) value = *resolved;
        }
        if (!value.empty()) w.identity_properties[value].push_back(stmt);
      });
    }

    // registrations anywhere in the project
    for (const auto& file : ctx.project.files) {
      walk(*file->tree.root, [&](const Node& n) {
        const auto* call = as<MethodCall>(&n);
        if (!call || !call->receiver) return;
        if (!ctx.catalog.is_registration_method(call->name)) return;
        VarRef ref = resolve_var(ctx.project, *call->receiver);
        if (ref.var != w.var) return;
        w.registrations.push_back({call->receiver, call, file.get()});
      });
    }
  }
  return out;
}

const WidgetDecl* widget_of_expr(const AnalysisContext& ctx, const std::vector<WidgetDecl>& widgets,
                                 const Node& expr) {
  VarRef ref = resolve_var(ctx.project, expr);
  if (!ref.var) return nullptr;
  for (const WidgetDecl& w : widgets)
    if (w.var == ref.var) return &w;
  return nullptr;
}

}  // namespace bloblint
