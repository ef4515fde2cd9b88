#include "bloblint/commands.hpp"

#include <algorithm>

namespace bloblint {

namespace {

std::vector<const Node*> block_stmts(const Node* stmt) {
  if (!stmt) return {};
  if (const auto* block = as<Block>(stmt)) {
    std::vector<const Node*> out(block->stmts.begin(), block->stmts.end());
    return out;
  }
  return {stmt};
}

bool is_event_dependent_conditional(const Node& n, const EventTaint& taint) {
  if (const auto* i = as<IfStmt>(&n)) return i->cond && taint.expr_tainted(*i->cond);
  if (const auto* sw = as<SwitchStmt>(&n))
    return sw->scrutinee && taint.expr_tainted(*sw->scrutinee);
  return false;
}

bool contains_ed_conditional(const std::vector<const Node*>& stmts, const EventTaint& taint) {
  for (const Node* s : stmts) {
    bool found = false;
    walk(*s, [&](const Node& n) {
      if (!found && is_event_dependent_conditional(n, taint)) found = true;
    });
    if (found) return true;
  }
  return false;
}

// Event getter feeding an expression, traced through one level of local defs.
std::string getter_of(const Node* expr, const Node& body) {
  if (!expr) return "";
  switch (expr->kind) {
    case NodeKind::MethodCall:
      return static_cast<const MethodCall*>(expr)->name;
    case NodeKind::Cast:
      return getter_of(static_cast<const Cast*>(expr)->value, body);
    case NodeKind::FieldAccess:
      return static_cast<const FieldAccess*>(expr)->name;
    case NodeKind::Identifier: {
      const std::string& name = static_cast<const Identifier*>(expr)->name;
      const Node* init = nullptr;
      walk(body, [&](const Node& n) {
        if (init) return;
        if (const auto* v = as<VarDeclarator>(&n); v && v->name == name && v->init) init = v->init;
      });
      return init ? getter_of(init, body) : "";
    }
    default:
      return "";
  }
}

struct AtomCollector {
  const AnalysisContext& ctx;
  const EventTaint& taint;
  const Node& body;
  std::string context_class;
  std::vector<IdentificationAtom>& atoms;
  const Node** event_expr;

  bool widget_typed(const Node& expr) const {
    const TypeRef* t = declared_type(ctx.project, expr);
    return t && ctx.catalog.widget_by_name(t->name) != nullptr;
  }

  std::optional<std::string> string_value(const Node& expr) const {
    if (const auto* lit = as<StringLit>(&expr)) return lit->value;
    if (const auto* id = as<Identifier>(&expr))
      return ctx.constants.lookup(context_class, id->name);
    if (const auto* fa = as<FieldAccess>(&expr)) {
      if (const auto* base = as<Identifier>(fa->base))
        return ctx.constants.lookup(context_class, base->name + "." + fa->name);
    }
    return std::nullopt;
  }

  void note_event_side(const Node& side) {
    if (!*event_expr) *event_expr = &side;
  }

  void comparison(const Node& tainted_side, const Node& other) {
    note_event_side(tainted_side);
    IdentificationAtom atom;
    atom.comparator = &other;
    atom.getter = getter_of(&tainted_side, body);
    if (widget_typed(other)) {
      atom.kind = IdentificationAtom::Kind::WidgetReference;
    } else {
      atom.kind = IdentificationAtom::Kind::EventAttribute;
    }
    atoms.push_back(atom);
  }

  void equals_comparison(const Node& tainted_side, const Node& other) {
    note_event_side(tainted_side);
    IdentificationAtom atom;
    atom.comparator = &other;
    atom.getter = getter_of(&tainted_side, body);
    // property copied from a widget, e.g. m3.getActionCommand()
    if (const auto* call = as<MethodCall>(&other);
        call && call->receiver && ctx.catalog.is_identity_getter(call->name) &&
        widget_typed(*call->receiver)) {
      atom.kind = IdentificationAtom::Kind::WidgetReference;
      atom.comparator = call->receiver;
      atoms.push_back(atom);
      return;
    }
    if (auto value = string_value(other)) {
      atom.kind = IdentificationAtom::Kind::PropertyValue;
      atom.value = *value;
      atoms.push_back(atom);
      return;
    }
    atom.kind = IdentificationAtom::Kind::PropertyValue;  // unresolved property
    atoms.push_back(atom);
  }

  void collect(const Node& cond) {
    switch (cond.kind) {
      case NodeKind::Binary: {
        const auto& b = static_cast<const Binary&>(cond);
        if (b.op == "&&" || b.op == "||") {
          collect(*b.lhs);
          collect(*b.rhs);
          return;
        }
        if (b.op == "==") {
          bool l = taint.expr_tainted(*b.lhs), r = taint.expr_tainted(*b.rhs);
          if (l && !r) comparison(*b.lhs, *b.rhs);
          else if (r && !l) comparison(*b.rhs, *b.lhs);
          return;
        }
        // other relational operators on event attributes (e.getClickCount() > 1)
        if (b.op == "!=" || b.op == "<" || b.op == ">" || b.op == "<=" || b.op == ">=") {
          bool l = taint.expr_tainted(*b.lhs), r = taint.expr_tainted(*b.rhs);
          if (l != r) {
            const Node& tainted_side = l ? *b.lhs : *b.rhs;
            note_event_side(tainted_side);
            IdentificationAtom atom;
            atom.kind = IdentificationAtom::Kind::EventAttribute;
            atom.comparator = l ? b.rhs : b.lhs;
            atom.getter = getter_of(&tainted_side, body);
            atoms.push_back(atom);
          }
          return;
        }
        return;
      }
      case NodeKind::InstanceOf: {
        const auto& io = static_cast<const InstanceOf&>(cond);
        if (taint.expr_tainted(*io.value)) {
          note_event_side(*io.value);
          IdentificationAtom atom;
          atom.kind = IdentificationAtom::Kind::TypeCheck;
          atom.comparator = io.type;
          atom.type_name = io.type->simple();
          atom.getter = getter_of(io.value, body);
          atoms.push_back(atom);
        }
        return;
      }
      case NodeKind::MethodCall: {
        const auto& call = static_cast<const MethodCall&>(cond);
        if (call.name == "equals" && call.args.size() == 1 && call.receiver) {
          bool l = taint.expr_tainted(*call.receiver), r = taint.expr_tainted(*call.args[0]);
          if (l && !r) equals_comparison(*call.receiver, *call.args[0]);
          else if (r && !l) equals_comparison(*call.args[0], *call.receiver);
          return;
        }
        // bare boolean event attribute, e.g. e.isControlDown()
        if (taint.expr_tainted(cond)) {
          note_event_side(cond);
          IdentificationAtom atom;
          atom.kind = IdentificationAtom::Kind::EventAttribute;
          atom.getter = call.name;
          atoms.push_back(atom);
        }
        return;
      }
      default:
        return;  // negations and exotic shapes contribute no atoms
    }
  }
};

// Walks enclosing conditionals from anchor (exclusive) up to body (exclusive).
void classify_guards(const Node& anchor, const Node& body, const EventTaint& taint,
                     SourceObjectIdentification& ident) {
  std::vector<const Node*> guards, wraps;
  for (const Node* p = anchor.parent; p && p != &body; p = p->parent) {
    if (p->kind == NodeKind::IfStmt || p->kind == NodeKind::SwitchStmt) {
      if (is_event_dependent_conditional(*p, taint))
        guards.push_back(p);
      else
        wraps.push_back(p);
    }
  }
  std::reverse(guards.begin(), guards.end());
  std::reverse(wraps.begin(), wraps.end());
  guards.push_back(&anchor);
  ident.guard_chain = std::move(guards);
  for (const Node* w : wraps)
    if (is<IfStmt>(w)) ident.wrap_conds.push_back(w);
  ident.under_non_event_conditional = !wraps.empty();
}

struct Selector {
  const AnalysisContext& ctx;
  const EventTaint& taint;
  const Node& body;
  std::string context_class;
  AnchorSelection result;

  void emit_if_anchor(const IfStmt* arm, bool under_non_ed) {
    SourceObjectIdentification ident;
    ident.anchor = arm;
    AtomCollector collector{ctx, taint, body, context_class, ident.atoms, &ident.event_expr};
    collector.collect(*arm->cond);
    classify_guards(*arm, body, taint, ident);
    ident.under_non_event_conditional |= under_non_ed;
    finish(ident, /*is_case=*/false);
  }

  void emit_case_anchor(const SwitchCase* c, const SwitchStmt* sw, bool under_non_ed) {
    SourceObjectIdentification ident;
    ident.anchor = c;
    ident.event_expr = sw->scrutinee;
    std::string getter = getter_of(sw->scrutinee, body);
    IdentificationAtom atom;
    atom.comparator = c->label;
    atom.getter = getter;
    if (ctx.catalog.is_identity_getter(getter)) {
      atom.kind = IdentificationAtom::Kind::PropertyValue;
      if (c->label) {
        AtomCollector collector{ctx, taint, body, context_class, ident.atoms, &ident.event_expr};
        if (auto value = collector.string_value(*c->label)) atom.value = *value;
      }
    } else {
      atom.kind = IdentificationAtom::Kind::EventAttribute;
    }
    ident.atoms.push_back(atom);
    classify_guards(*c, body, taint, ident);
    ident.under_non_event_conditional |= under_non_ed;
    finish(ident, /*is_case=*/true);
  }

  void finish(SourceObjectIdentification& ident, bool is_case) {
    bool any_widget_ref = false, any_property = false, any_type = false;
    bool any_identity_property = false;
    for (const auto& a : ident.atoms) {
      switch (a.kind) {
        case IdentificationAtom::Kind::WidgetReference: any_widget_ref = true; break;
        case IdentificationAtom::Kind::PropertyValue:
          any_property = true;
          if (a.getter.empty() || ctx.catalog.is_identity_getter(a.getter))
            any_identity_property = true;
          break;
        case IdentificationAtom::Kind::TypeCheck: any_type = true; break;
        case IdentificationAtom::Kind::EventAttribute: break;
      }
    }
    if (is_case)
      ident.variant = IdentificationVariant::SwitchCase;
    else if (any_widget_ref)
      ident.variant = IdentificationVariant::ReferenceComparison;
    else if (any_property)
      ident.variant = IdentificationVariant::PropertyComparison;
    else if (any_type)
      ident.variant = IdentificationVariant::TypeCheck;
    else
      ident.variant = IdentificationVariant::PropertyComparison;
    ident.widget_identifying = any_widget_ref || any_type || any_identity_property;
    result.anchors.push_back(std::move(ident));
  }

  void in_stmts(const std::vector<const Node*>& stmts, bool under_non_ed) {
    for (const Node* s : stmts) in_stmt(s, under_non_ed);
  }

  void in_stmt(const Node* s, bool under_non_ed) {
    if (!s) return;
    switch (s->kind) {
      case NodeKind::IfStmt:
        process_chain(static_cast<const IfStmt*>(s), under_non_ed);
        break;
      case NodeKind::SwitchStmt:
        process_switch(static_cast<const SwitchStmt*>(s), under_non_ed);
        break;
      case NodeKind::Block:
        in_stmts(block_stmts(s), under_non_ed);
        break;
      case NodeKind::ForStmt:
        in_stmt(static_cast<const ForStmt*>(s)->body, under_non_ed);
        break;
      case NodeKind::ForEachStmt:
        in_stmt(static_cast<const ForEachStmt*>(s)->body, under_non_ed);
        break;
      case NodeKind::WhileStmt:
        in_stmt(static_cast<const WhileStmt*>(s)->body, under_non_ed);
        break;
      case NodeKind::TryStmt:
        in_stmt(static_cast<const TryStmt*>(s)->body, under_non_ed);
        break;
      default:
        break;
    }
  }

  void process_chain(const IfStmt* root, bool under_non_ed) {
    // normalize the else-if chain into arms + optional final else
    std::vector<const IfStmt*> arms;
    std::vector<const Node*> final_else;
    const IfStmt* cur = root;
    for (;;) {
      arms.push_back(cur);
      if (!cur->else_stmt) break;
      if (const auto* next = as<IfStmt>(cur->else_stmt)) {
        cur = next;
        continue;
      }
      final_else = block_stmts(cur->else_stmt);
      break;
    }
    const Node* last_arm_anchor = nullptr;
    for (const IfStmt* arm : arms) {
      std::vector<const Node*> arm_block = block_stmts(arm->then_stmt);
      if (arm->cond && taint.expr_tainted(*arm->cond)) {
        if (contains_ed_conditional(arm_block, taint)) {
          in_stmts(arm_block, under_non_ed);
          last_arm_anchor = nullptr;
        } else {
          emit_if_anchor(arm, under_non_ed);
          last_arm_anchor = arm;
        }
      } else {
        in_stmts(arm_block, true);
        last_arm_anchor = nullptr;
      }
    }
    if (!final_else.empty()) {
      if (contains_ed_conditional(final_else, taint)) {
        in_stmts(final_else, under_non_ed);
      } else if (last_arm_anchor) {
        // a bare else without its own event guard joins the enclosing command
        result.attached[last_arm_anchor] = final_else;
      }
    }
  }

  void process_switch(const SwitchStmt* sw, bool under_non_ed) {
    bool scrut_ed = sw->scrutinee && taint.expr_tainted(*sw->scrutinee);
    const SwitchCase* last_case = nullptr;
    for (const SwitchCase* c : sw->cases) {
      std::vector<const Node*> stmts(c->stmts.begin(), c->stmts.end());
      if (!scrut_ed) {
        in_stmts(stmts, true);
        continue;
      }
      if (!c->label) {  // default: joins the previous command, like a bare else
        if (contains_ed_conditional(stmts, taint)) {
          in_stmts(stmts, under_non_ed);
        } else if (last_case) {
          result.attached[last_case] = stmts;
        }
        continue;
      }
      if (contains_ed_conditional(stmts, taint)) {
        in_stmts(stmts, under_non_ed);
        last_case = nullptr;
      } else {
        emit_case_anchor(c, sw, under_non_ed);
        last_case = c;
      }
    }
  }
};

const ClassDecl* scope_owner(const AnalysisContext& ctx, const Node& body) {
  return ctx.project.enclosing_class(body);
}

}  // namespace

const char* variant_name(IdentificationVariant v) {
  switch (v) {
    case IdentificationVariant::PropertyComparison: return "property-comparison";
    case IdentificationVariant::TypeCheck: return "type-check";
    case IdentificationVariant::ReferenceComparison: return "reference-comparison";
    case IdentificationVariant::SwitchCase: return "switch-case";
  }
  return "?";
}

// --- taint ---------------------------------------------------------------------

EventTaint EventTaint::compute(const Node& body, const std::string& event_param) {
  EventTaint t;
  t.locals_.insert(event_param);
  walk(body, [&](const Node& n) {
    if (const auto* d = as<LocalVarDecl>(&n)) {
      for (const VarDeclarator* v : d->vars) t.locals_.insert(v->name);
    }
  });
  t.names_.insert(event_param);
  bool changed = true;
  while (changed) {
    changed = false;
    walk(body, [&](const Node& n) {
      const Node* target = nullptr;
      const Node* value = nullptr;
      if (const auto* v = as<VarDeclarator>(&n); v && v->init) {
        if (t.locals_.count(v->name) && !t.names_.count(v->name) && t.expr_tainted(*v->init)) {
          t.names_.insert(v->name);
          changed = true;
        }
        return;
      }
      if (const auto* a = as<Assign>(&n)) {
        target = a->target;
        value = a->value;
      }
      if (!target || !value) return;
      const auto* id = as<Identifier>(target);
      if (!id || !t.locals_.count(id->name) || t.names_.count(id->name)) return;
      if (t.expr_tainted(*value)) {
        t.names_.insert(id->name);
        changed = true;
      }
    });
  }
  return t;
}

bool EventTaint::expr_tainted(const Node& expr) const {
  bool found = false;
  walk(expr, [&](const Node& n) {
    if (found) return;
    if (const auto* id = as<Identifier>(&n)) {
      if (names_.count(id->name)) found = true;
    } else if (const auto* op = as<Opaque>(&n)) {
      for (const auto& name : names_)
        if (op->mentions(name)) {
          found = true;
          break;
        }
    }
  });
  return found;
}

// --- name sets -------------------------------------------------------------------

std::set<std::string> mentioned_names(const Node& n) {
  std::set<std::string> out;
  walk(n, [&](const Node& c) {
    if (const auto* id = as<Identifier>(&c)) {
      if (id->name != "this" && id->name != "super") out.insert(id->name);
    } else if (const auto* fa = as<FieldAccess>(&c)) {
      out.insert(fa->name);
    } else if (const auto* op = as<Opaque>(&c)) {
      out.insert(op->idents.begin(), op->idents.end());
    }
  });
  return out;
}

std::set<std::string> defined_names(const Node& stmt) {
  std::set<std::string> out;
  walk(stmt, [&](const Node& c) {
    if (const auto* v = as<VarDeclarator>(&c)) {
      out.insert(v->name);
    } else if (const auto* a = as<Assign>(&c)) {
      if (const auto* id = as<Identifier>(a->target))
        out.insert(id->name);
      else if (const auto* fa = as<FieldAccess>(a->target))
        out.insert(fa->name);
    }
  });
  return out;
}

// --- spec operations ----------------------------------------------------------------

std::vector<const Node*> find_conditionals(const Node& body) {
  std::vector<const Node*> out;
  walk(body, [&](const Node& n) {
    if (n.kind == NodeKind::IfStmt || n.kind == NodeKind::SwitchCase) out.push_back(&n);
  });
  std::sort(out.begin(), out.end(),
            [](const Node* a, const Node* b) { return a->span.begin < b->span.begin; });
  return out;
}

std::vector<const Node*> filter_event_dependent(const std::vector<const Node*>& conds,
                                                const EventTaint& taint) {
  std::vector<const Node*> out;
  for (const Node* c : conds) {
    if (const auto* i = as<IfStmt>(c)) {
      if (i->cond && taint.expr_tainted(*i->cond)) out.push_back(c);
    } else if (const auto* sc = as<SwitchCase>(c)) {
      const auto* sw = as<SwitchStmt>(sc->parent);
      if (sw && sw->scrutinee && taint.expr_tainted(*sw->scrutinee)) out.push_back(c);
    }
  }
  return out;
}

AnchorSelection select_command_anchors(const AnalysisContext& ctx, const Node& body,
                                       const EventTaint& taint) {
  const ClassDecl* owner = scope_owner(ctx, body);
  Selector selector{ctx, taint, body, owner ? owner->name : "", {}};
  selector.in_stmts(block_stmts(&body), false);
  std::sort(selector.result.anchors.begin(), selector.result.anchors.end(),
            [](const SourceObjectIdentification& a, const SourceObjectIdentification& b) {
              return a.anchor->span.begin < b.anchor->span.begin;
            });
  return std::move(selector.result);
}

std::vector<DispatchMethod> find_dispatch_methods(const AnalysisContext& ctx, const Node& body,
                                                  const EventTaint& taint,
                                                  const ClassDecl* owner) {
  std::vector<DispatchMethod> out;
  walk(body, [&](const Node& n) {
    const auto* call = as<MethodCall>(&n);
    if (!call) return;
    int pos = -1;
    for (std::size_t i = 0; i < call->args.size(); ++i) {
      if (taint.expr_tainted(*call->args[i])) {
        pos = static_cast<int>(i);
        break;
      }
    }
    if (pos < 0) return;

    const ClassDecl* target_class = nullptr;
    bool via_super = false;
    if (!call->receiver) {
      target_class = owner;
    } else if (const auto* id = as<Identifier>(call->receiver)) {
      if (id->name == "this") {
        target_class = owner;
      } else if (id->name == "super") {
        via_super = true;
        if (owner && owner->extends) {
          if (const ClassInfo* ci = ctx.project.find_class(owner->extends->simple()))
            target_class = ci->decl;
        }
      } else if (const TypeRef* t = declared_type(ctx.project, *call->receiver)) {
        if (const ClassInfo* ci = ctx.project.find_class(t->simple())) target_class = ci->decl;
      }
    } else if (const TypeRef* t = declared_type(ctx.project, *call->receiver)) {
      if (const ClassInfo* ci = ctx.project.find_class(t->simple())) target_class = ci->decl;
    }
    (void)via_super;

    for (int depth = 0; target_class && depth < 8; ++depth) {
      for (const Node* m : target_class->members) {
        const auto* method = as<MethodDecl>(m);
        if (!method || method->name != call->name ||
            method->params.size() != call->args.size() || !method->body)
          continue;
        for (const auto& existing : out)
          if (existing.method == method) return;
        out.push_back({method, pos, call});
        return;
      }
      const ClassInfo* super = target_class->extends
                                   ? ctx.project.find_class(target_class->extends->simple())
                                   : nullptr;
      target_class = super && super->decl != target_class ? super->decl : nullptr;
    }
  });
  return out;
}

Command extract_command(const AnalysisContext& ctx, const SourceObjectIdentification& ident,
                        const std::vector<const Node*>& attached, const Node& body_root,
                        const std::string& event_param) {
  (void)ctx;
  Command cmd;
  cmd.identification = ident;
  cmd.body_root = &body_root;
  cmd.event_param = event_param;

  // main statements: the anchor's branch block plus any attached bare else
  if (const auto* arm = as<IfStmt>(ident.anchor)) {
    for (const Node* s : block_stmts(arm->then_stmt)) cmd.main_stmts.push_back(s);
  } else if (const auto* c = as<SwitchCase>(ident.anchor)) {
    for (const Node* s : c->stmts) cmd.main_stmts.push_back(s);
  }
  cmd.main_stmts.insert(cmd.main_stmts.end(), attached.begin(), attached.end());
  std::sort(cmd.main_stmts.begin(), cmd.main_stmts.end(),
            [](const Node* a, const Node* b) { return a->span.begin < b->span.begin; });

  // candidate statements on the lexical path: per ancestor block, the
  // statements before/after the child containing the anchor; statements that
  // hold other commands' conditionals are not candidates
  std::vector<const Node*> before, after;
  EventTaint taint = EventTaint::compute(body_root, event_param);
  const Node* child = ident.anchor;
  for (const Node* p = ident.anchor->parent; p; child = p, p = p->parent) {
    if (const auto* block = as<Block>(p)) {
      bool seen = false;
      for (const Node* s : block->stmts) {
        if (s == child) {
          seen = true;
          continue;
        }
        bool has_ed = contains_ed_conditional({s}, taint);
        if (!seen && !has_ed) before.push_back(s);
        if (seen && !has_ed) after.push_back(s);
      }
    }
    if (p == &body_root) break;
  }
  std::sort(before.begin(), before.end(),
            [](const Node* a, const Node* b) { return a->span.begin < b->span.begin; });
  std::sort(after.begin(), after.end(),
            [](const Node* a, const Node* b) { return a->span.begin < b->span.begin; });

  // backward: defs transitively used by main statements or the guard chain
  std::set<std::string> needed;
  for (const Node* s : cmd.main_stmts) {
    auto names = mentioned_names(*s);
    needed.insert(names.begin(), names.end());
  }
  for (const Node* g : ident.guard_chain) {
    const Node* cond = nullptr;
    if (const auto* i = as<IfStmt>(g))
      cond = i->cond;
    else if (const auto* sw = as<SwitchStmt>(g))
      cond = sw->scrutinee;
    else if (const auto* c = as<SwitchCase>(g))
      if (const auto* sw = as<SwitchStmt>(c->parent)) cond = sw->scrutinee;
    if (cond) {
      auto names = mentioned_names(*cond);
      needed.insert(names.begin(), names.end());
    }
  }
  for (const Node* w : ident.wrap_conds) {
    if (const auto* i = as<IfStmt>(w)) {
      auto names = mentioned_names(*i->cond);
      needed.insert(names.begin(), names.end());
    }
  }
  std::set<const Node*> sliced;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = before.rbegin(); it != before.rend(); ++it) {
      const Node* s = *it;
      if (sliced.count(s)) continue;
      bool relevant = false;
      auto defs = defined_names(*s);
      for (const auto& d : defs)
        if (needed.count(d)) relevant = true;
      if (const auto* op = as<Opaque>(s)) {
        for (const auto& name : needed)
          if (op->mentions(name)) relevant = true;
      }
      if (!relevant) continue;
      sliced.insert(s);
      auto names = mentioned_names(*s);
      needed.insert(names.begin(), names.end());
      changed = true;
    }
  }
  for (const Node* s : before)
    if (sliced.count(s)) cmd.sliced_before.push_back(s);

  // forward: statements using variables read or written by main statements
  std::set<std::string> main_vars;
  for (const Node* s : cmd.main_stmts) {
    auto names = mentioned_names(*s);
    main_vars.insert(names.begin(), names.end());
    auto defs = defined_names(*s);
    main_vars.insert(defs.begin(), defs.end());
  }
  for (const Node* s : after) {
    auto names = mentioned_names(*s);
    bool uses = false;
    for (const auto& name : names)
      if (main_vars.count(name)) uses = true;
    if (uses) cmd.sliced_after.push_back(s);
  }
  return cmd;
}

std::vector<Command> detect_commands(const AnalysisContext& ctx, const ListenerImpl& listener,
                                     int dispatch_depth) {
  std::vector<Command> out;
  for (std::size_t hi = 0; hi < listener.handlers.size(); ++hi) {
    const Handler& handler = listener.handlers[hi];
    struct Scope {
      const Node* body;
      std::string param;
      std::vector<const MethodDecl*> chain;
    };
    std::vector<Scope> scopes = {{handler.body, handler.event_param, {}}};
    std::set<const MethodDecl*> visited;
    for (std::size_t i = 0; i < scopes.size(); ++i) {
      if (static_cast<int>(scopes[i].chain.size()) >= dispatch_depth) continue;
      EventTaint taint = EventTaint::compute(*scopes[i].body, scopes[i].param);
      const ClassDecl* owner = scope_owner(ctx, *scopes[i].body);
      if (!owner) owner = listener.owner;
      for (const DispatchMethod& dm : find_dispatch_methods(ctx, *scopes[i].body, taint, owner)) {
        if (!dm.method->body || visited.count(dm.method)) continue;
        if (dm.event_arg_position < 0 ||
            dm.event_arg_position >= static_cast<int>(dm.method->params.size()))
          continue;
        visited.insert(dm.method);
        Scope next;
        next.body = dm.method->body;
        next.param = dm.method->params[dm.event_arg_position]->name;
        next.chain = scopes[i].chain;
        next.chain.push_back(dm.method);
        scopes.push_back(std::move(next));
      }
    }

    std::vector<Command> handler_cmds;
    for (const Scope& scope : scopes) {
      EventTaint taint = EventTaint::compute(*scope.body, scope.param);
      AnchorSelection sel = select_command_anchors(ctx, *scope.body, taint);
      for (const SourceObjectIdentification& ident : sel.anchors) {
        // an identification guarding an empty branch produces no command
        bool own_empty = true;
        if (const auto* arm = as<IfStmt>(ident.anchor))
          own_empty = block_stmts(arm->then_stmt).empty();
        else if (const auto* c = as<SwitchCase>(ident.anchor))
          own_empty = c->stmts.empty();
        if (own_empty) continue;
        std::vector<const Node*> attached;
        if (auto it = sel.attached.find(ident.anchor); it != sel.attached.end())
          attached = it->second;
        Command cmd = extract_command(ctx, ident, attached, *scope.body, scope.param);
        cmd.owner = &listener;
        cmd.handler_index = static_cast<int>(hi);
        cmd.dispatch_chain = scope.chain;
        handler_cmds.push_back(std::move(cmd));
      }
    }
    if (handler_cmds.empty()) {
      // no source object identification: the whole handler body is one command
      Command cmd;
      cmd.owner = &listener;
      cmd.handler_index = static_cast<int>(hi);
      cmd.body_root = handler.body;
      cmd.event_param = handler.event_param;
      for (const Node* s : block_stmts(handler.body)) cmd.main_stmts.push_back(s);
      handler_cmds.push_back(std::move(cmd));
    }
    for (auto& cmd : handler_cmds) out.push_back(std::move(cmd));
  }
  return out;
}

}  // namespace bloblint
