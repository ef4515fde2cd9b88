#include "bloblint/refactor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bloblint {

namespace {

std::string at_position(const SourceFile* file, const Node* n) {
  if (!file || !n) return "?";
  return file->path + ":" + std::to_string(file->line_of(n->span.begin));
}

std::size_t line_start(const std::string& text, std::size_t pos) {
  while (pos > 0 && text[pos - 1] != '\n') --pos;
  return pos;
}

std::size_t line_end(const std::string& text, std::size_t pos) {
  while (pos < text.size() && text[pos] != '\n') ++pos;
  return pos < text.size() ? pos + 1 : pos;
}

bool blank_between(const std::string& text, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n') return false;
  return true;
}

// Whole-line span of a statement; deletions also swallow one preceding blank line.
Span full_lines(const std::string& text, Span span, bool swallow_blank = false) {
  std::size_t begin = line_start(text, span.begin);
  std::size_t end = line_end(text, span.end > 0 ? span.end - 1 : 0);
  if (swallow_blank && begin > 0) {
    std::size_t prev = line_start(text, begin - 1);
    if (blank_between(text, prev, begin)) begin = prev;
  }
  return {begin, end};
}

std::string indent_at(const std::string& text, std::size_t pos) {
  std::size_t start = line_start(text, pos);
  std::string indent;
  for (std::size_t i = start; i < text.size() && (text[i] == ' ' || text[i] == '\t'); ++i)
    indent += text[i];
  return indent;
}

// Statement text re-anchored at `new_indent`, preserving relative indentation.
std::string reindent(const SourceFile& file, Span span, const std::string& new_indent) {
  std::string old_indent = indent_at(file.text, span.begin);
  std::string slice = file.slice(span);
  std::ostringstream out;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= slice.size()) {
    std::size_t nl = slice.find('\n', pos);
    std::string line = slice.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    if (first) {
      out << new_indent << line;
      first = false;
    } else {
      std::size_t strip = 0;
      while (strip < old_indent.size() && strip < line.size() &&
             (line[strip] == ' ' || line[strip] == '\t'))
        ++strip;
      out << '\n' << new_indent << line.substr(strip);
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out.str();
}

bool is_terminator(const Node* n) {
  if (const auto* r = as<ReturnStmt>(n)) return r->value == nullptr;
  return is<BreakStmt>(n);
}

// Copy list in source order with command-terminating return/break removed.
std::vector<const Node*> copied_statements(const Command& cmd) {
  std::vector<const Node*> stmts;
  stmts.insert(stmts.end(), cmd.sliced_before.begin(), cmd.sliced_before.end());
  std::vector<const Node*> main = cmd.main_stmts;
  while (!main.empty() && is_terminator(main.back())) main.pop_back();
  stmts.insert(stmts.end(), main.begin(), main.end());
  stmts.insert(stmts.end(), cmd.sliced_after.begin(), cmd.sliced_after.end());
  std::sort(stmts.begin(), stmts.end(),
            [](const Node* a, const Node* b) { return a->span.begin < b->span.begin; });
  return stmts;
}

// A return/break that does not merely terminate the command changes control
// flow and blocks the automatic rewrite.
bool has_early_exit(const Command& cmd) {
  std::vector<const Node*> main = cmd.main_stmts;
  while (!main.empty() && is_terminator(main.back())) main.pop_back();
  std::vector<const Node*> stmts;
  stmts.insert(stmts.end(), cmd.sliced_before.begin(), cmd.sliced_before.end());
  stmts.insert(stmts.end(), main.begin(), main.end());
  stmts.insert(stmts.end(), cmd.sliced_after.begin(), cmd.sliced_after.end());
  for (const Node* root : stmts) {
    bool bad = false;
    walk(*root, [&](const Node& n) {
      if (bad) return;
      if (is<ReturnStmt>(&n)) {
        bad = true;
        return;
      }
      if (is<BreakStmt>(&n)) {
        // a break binding to a loop/switch inside the copied statement is fine
        bool bound = false;
        for (const Node* p = n.parent; p && p != root->parent; p = p->parent) {
          if (p->kind == NodeKind::ForStmt || p->kind == NodeKind::ForEachStmt ||
              p->kind == NodeKind::WhileStmt || p->kind == NodeKind::SwitchStmt) {
            bound = true;
            break;
          }
        }
        if (!bound) bad = true;
      }
    });
    if (bad) return true;
  }
  return false;
}

const ClassDecl* site_class(const AnalysisContext& ctx, const MethodCall* call) {
  return ctx.project.enclosing_class(*call);
}

const ExprStmt* site_statement(const MethodCall* call) {
  for (const Node* p = call->parent; p; p = p->parent) {
    if (const auto* s = as<ExprStmt>(p)) return s;
    if (p->kind != NodeKind::MethodCall && p->kind != NodeKind::FieldAccess) return nullptr;
  }
  return nullptr;
}

bool type_matches_spec(const TypeRef* t, const ListenerSpec* spec) {
  return t && (t->name == spec->qualified_name || t->simple() == spec->simple_name());
}

}  // namespace

const char* reason_name(UnrefactorableReason r) {
  switch (r) {
    case UnrefactorableReason::SingleObjectMultiCommand: return "single-object-multi-command";
    case UnrefactorableReason::NoWidgetFound: return "no-widget-found";
    case UnrefactorableReason::AmbiguousAssociation: return "ambiguous-association";
    case UnrefactorableReason::ManualAttributeCopy: return "manual-attribute-copy";
  }
  return "?";
}

RefactorOutcome plan_refactoring(const AnalysisContext& ctx, const BlobDiagnosis& blob,
                                 const std::vector<Command>& commands,
                                 const std::vector<Association>& associations,
                                 const std::vector<WidgetDecl>& widgets, RefactorStyle style) {
  (void)widgets;
  RefactorOutcome out;
  const ListenerImpl& listener = *blob.listener;
  auto fail = [&](UnrefactorableReason reason, const std::string& diag) -> RefactorOutcome& {
    out.failure = Unrefactorable{reason, diag};
    out.plan.reset();
    return out;
  };

  if (blob.blob_type == BlobType::SingleObjectMultiCommand)
    return fail(UnrefactorableReason::SingleObjectMultiCommand,
                listener.id + " at " + at_position(listener.file, listener.decl_node()) +
                    ": one interactive object produces several commands (key/mouse style); "
                    "not automatically refactorable");
  if (listener.kind != ListenerKind::Class)
    return fail(UnrefactorableReason::AmbiguousAssociation,
                listener.id + ": inline listener with unresolvable registration receiver");

  RefactorPlan plan;
  plan.blob = blob;
  if (commands.empty()) {  // degenerate plan: nothing to move, nothing removed
    out.plan = std::move(plan);
    return out;
  }

  std::set<const MethodCall*> listener_calls;
  for (const auto& site : listener.registrations) listener_calls.insert(site.call);

  // validate associations and resolve each widget's registration sites
  std::map<const WidgetDecl*, std::vector<const MethodCall*>> widget_sites;
  std::map<const WidgetDecl*, const Command*> claimed_by;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const Command& cmd = commands[i];
    const Association& assoc = associations[i];
    const SourceFile* file = listener.file;
    std::string pos = cmd.anchor() ? at_position(file, cmd.anchor())
                                   : at_position(file, listener.decl_node());
    if (assoc.empty())
      return fail(UnrefactorableReason::NoWidgetFound,
                  "command at " + pos + ": no associated interactive object");
    if (assoc.ambiguous())
      return fail(UnrefactorableReason::AmbiguousAssociation,
                  "command at " + pos + ": several interactive objects of the checked type "
                  "register this listener");
    for (const WidgetDecl* w : assoc.decls()) {
      auto [it, inserted] = claimed_by.emplace(w, &cmd);
      if (!inserted && it->second != &cmd)
        return fail(UnrefactorableReason::AmbiguousAssociation,
                    "widget '" + w->name() + "' is attributed to two commands");
      if (!widget_sites.count(w)) {
        std::vector<const MethodCall*> sites;
        for (const auto& reg : w->registrations)
          if (listener_calls.count(reg.call)) sites.push_back(reg.call);
        if (sites.empty())
          return fail(UnrefactorableReason::NoWidgetFound,
                      "widget '" + w->name() + "' never registers listener " + listener.id);
        widget_sites[w] = std::move(sites);
      }
    }
    if (has_early_exit(cmd))
      return fail(UnrefactorableReason::ManualAttributeCopy,
                  "command at " + pos +
                      ": an early return/break alters control flow; refactor manually");
  }

  // every registration of the blob must be consumed, or removing the handler
  // would orphan a live site
  std::set<const MethodCall*> consumed;
  for (const auto& [w, sites] : widget_sites) consumed.insert(sites.begin(), sites.end());
  for (const auto& site : listener.registrations)
    if (!consumed.count(site.call))
      return fail(UnrefactorableReason::AmbiguousAssociation,
                  "registration at " + at_position(site.file, site.call) +
                      " is not attributable to any command");

  // build one insertion per command
  std::set<std::string> used_names;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const Command& cmd = commands[i];
    ListenerInsertion ins;
    ins.command = &cmd;
    ins.style = style;
    if (style == RefactorStyle::Lambda && listener.spec->methods.size() > 1) {
      ins.style = RefactorStyle::AnonymousClass;
      plan.notes.push_back(listener.spec->simple_name() +
                           " has several handler methods; lambda style falls back to an "
                           "anonymous class");
    }
    for (const WidgetDecl* w : associations[i].decls()) {
      ins.widgets.push_back(w);
      for (const MethodCall* call : widget_sites[w]) {
        if (!site_statement(call))
          return fail(UnrefactorableReason::ManualAttributeCopy,
                      "registration of '" + w->name() +
                          "' is embedded in an expression; refactor manually");
        ins.sites.emplace_back(w, call);
      }
    }
    ins.shared = ins.widgets.size() > 1;
    if (ins.shared) {
      const ClassDecl* target = site_class(ctx, ins.sites.front().second);
      for (const auto& [w, call] : ins.sites)
        if (site_class(ctx, call) != target)
          return fail(UnrefactorableReason::AmbiguousAssociation,
                      "shared command registrations span several classes");
      std::string base;
      for (const WidgetDecl* w : ins.widgets) base += (base.empty() ? "" : "_") + w->name();
      base += "_listener";
      std::string name = base;
      for (int k = 2; used_names.count(name) ||
                      (target && mentions_name(*target, name));
           ++k)
        name = base + "_" + std::to_string(k);
      used_names.insert(name);
      ins.constant_name = name;
    }
    plan.insertions.push_back(std::move(ins));
  }

  // attribute copies: blob-class state used by commands landing in another class
  std::set<const FieldDecl*> copied_fields;
  for (const ListenerInsertion& ins : plan.insertions) {
    const ClassDecl* target = site_class(ctx, ins.sites.front().second);
    if (!target || target == listener.owner) continue;
    std::set<std::string> needed;
    for (const Node* s : copied_statements(*ins.command)) {
      auto names = mentioned_names(*s);
      needed.insert(names.begin(), names.end());
    }
    // method dependencies on the blob class cannot be copied
    for (const Node* s : copied_statements(*ins.command)) {
      bool method_dep = false;
      std::string method_name;
      walk(*s, [&](const Node& n) {
        if (method_dep) return;
        const auto* call = as<MethodCall>(&n);
        if (!call) return;
        bool unqualified =
            !call->receiver || (is<Identifier>(call->receiver) &&
                                static_cast<const Identifier*>(call->receiver)->name == "this");
        if (!unqualified) return;
        for (const Node* m : listener.owner->members)
          if (const auto* md = as<MethodDecl>(m))
            if (md->name == call->name && md->params.size() == call->args.size()) {
              method_dep = true;
              method_name = md->name;
            }
      });
      if (method_dep)
        return fail(UnrefactorableReason::ManualAttributeCopy,
                    "command calls method '" + method_name + "' of " + listener.owner->name +
                        "; move it manually before refactoring");
    }
    // transitively copy referenced fields and their initialization statements
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Node* m : listener.owner->members) {
        const auto* field = as<FieldDecl>(m);
        if (!field || copied_fields.count(field)) continue;
        bool hit = false;
        for (const VarDeclarator* v : field->vars)
          if (needed.count(v->name)) hit = true;
        if (!hit) continue;
        copied_fields.insert(field);
        AttributeCopy copy;
        copy.field = field;
        copy.target = target;
        bool is_static_final = (field->mods & kModStatic) && (field->mods & kModFinal);
        if (!is_static_final) {
          for (const VarDeclarator* v : field->vars) {
            for (const Node* cm : listener.owner->members) {
              const Node* body = nullptr;
              if (const auto* ctor = as<ConstructorDecl>(cm)) body = ctor->body;
              if (!body) continue;
              walk(*body, [&](const Node& n) {
                if (const auto* block = as<Block>(&n)) {
                  for (const Node* s : block->stmts)
                    if ((is<ExprStmt>(s) || is<LocalVarDecl>(s)) && mentions_name(*s, v->name))
                      copy.init_statements.push_back(s);
                }
              });
            }
          }
        }
        for (const Node* s : copy.init_statements) {
          auto names = mentioned_names(*s);
          needed.insert(names.begin(), names.end());
        }
        plan.attribute_copies.push_back(std::move(copy));
        grew = true;
      }
    }
  }
  plan.needs_confirmation = !plan.attribute_copies.empty();

  // removals
  for (const Handler& h : listener.handlers)
    if (h.method) plan.removed_handlers.push_back(h.method);
  for (const TypeRef* t : listener.owner->implements) {
    if (type_matches_spec(t, listener.spec)) {
      plan.implements_entry = t;
      plan.remove_whole_implements = listener.owner->implements.size() == 1;
      break;
    }
  }
  if (!plan.implements_entry)
    plan.notes.push_back("listener interface comes from a superclass; extends clause kept");

  // identity setters that die with the removed guards
  std::vector<std::pair<std::string, const Node*>> setter_candidates;  // value -> stmt
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!commands[i].identification) continue;
    for (const IdentificationAtom& atom : commands[i].identification->atoms) {
      if (atom.kind != IdentificationAtom::Kind::PropertyValue || atom.value.empty()) continue;
      for (const WidgetDecl* w : associations[i].decls()) {
        auto it = w->identity_properties.find(atom.value);
        if (it == w->identity_properties.end()) continue;
        for (const Node* stmt : it->second) setter_candidates.emplace_back(atom.value, stmt);
      }
    }
  }
  std::set<const Node*> candidate_stmts;
  for (const auto& [value, stmt] : setter_candidates) candidate_stmts.insert(stmt);
  auto inside_removed = [&](const SourceFile* file, const Node& n) {
    for (const MethodDecl* m : plan.removed_handlers)
      if (listener.file == file && m->span.contains(n.span)) return true;
    for (const Node* s : candidate_stmts)
      if (ctx.project.file_of(*s) == file && s->span.contains(n.span)) return true;
    return false;
  };
  for (const auto& [value, stmt] : setter_candidates) {
    int external_refs = 0;
    for (const auto& file : ctx.project.files) {
      walk(*file->tree.root, [&](const Node& n) {
        if (inside_removed(file.get(), n)) return;
        if (const auto* lit = as<StringLit>(&n)) {
          if (lit->value != value) return;
          // the defining constant initializer itself is not a use
          if (const auto* v = as<VarDeclarator>(lit->parent); v && v->init == lit &&
              is<FieldDecl>(v->parent))
            return;
          ++external_refs;
          return;
        }
        std::string key;
        if (const auto* id = as<Identifier>(&n)) key = id->name;
        if (key.empty()) return;
        const ClassDecl* cls = ctx.project.enclosing_class(n);
        if (auto resolved = ctx.constants.lookup(cls ? cls->name : "", key);
            resolved && *resolved == value)
          ++external_refs;
      });
    }
    if (external_refs == 0) plan.dead_setter_stmts.push_back(stmt);
  }
  std::sort(plan.dead_setter_stmts.begin(), plan.dead_setter_stmts.end());
  plan.dead_setter_stmts.erase(
      std::unique(plan.dead_setter_stmts.begin(), plan.dead_setter_stmts.end()),
      plan.dead_setter_stmts.end());
  (void)dummy;

  out.plan = std::move(plan);
  return out;
}

// --- edit emission ----------------------------------------------------------------

namespace {

struct Emitter {
  const AnalysisContext& ctx;
  const RefactorPlan& plan;
  std::map<const SourceFile*, std::vector<TextEdit>> edits;

  void add(const SourceFile* file, Span span, std::string replacement) {
    edits[file].push_back({span, std::move(replacement)});
  }

  std::string command_body(const Command& cmd, const std::string& indent) {
    std::vector<const Node*> stmts = copied_statements(cmd);
    std::string body_indent = indent;
    std::ostringstream body;
    // non-event guards around the anchor are preserved
    std::string close;
    if (cmd.identification) {
      for (const Node* w : cmd.identification->wrap_conds) {
        const auto* wi = as<IfStmt>(w);
        const SourceFile* wf = ctx.project.file_of(*w);
        body << body_indent << "if (" << wf->slice(wi->cond->span) << ") {\n";
        close = body_indent + "}\n" + close;
        body_indent += "  ";
      }
    }
    for (const Node* s : stmts) {
      const SourceFile* sf = ctx.project.file_of(*s);
      body << reindent(*sf, s->span, body_indent) << "\n";
    }
    body << close;
    std::string text = body.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
  }

  std::string listener_text(const ListenerInsertion& ins, const std::string& indent) {
    const Command& cmd = *ins.command;
    const ListenerSpec& spec = *cmd.owner->spec;
    const std::string param = cmd.event_param.empty() ? "e" : cmd.event_param;
    if (ins.style == RefactorStyle::Lambda) {
      std::ostringstream out;
      out << param << " -> {\n" << command_body(cmd, indent + "  ") << "\n" << indent << "}";
      return out.str();
    }
    const std::string& handler_name = cmd.owner->handlers[cmd.handler_index].name;
    std::ostringstream out;
    out << "new " << spec.simple_name() << "() {\n";
    for (const HandlerMethodSpec& m : spec.methods) {
      out << indent << "  @Override\n";
      out << indent << "  public void " << m.name << "(" << m.event_type << " " << param
          << ") {\n";
      if (m.name == handler_name) out << command_body(cmd, indent + "    ") << "\n";
      out << indent << "  }\n";
    }
    out << indent << "}";
    return out.str();
  }

  void insertion_edits(const ListenerInsertion& ins) {
    if (ins.shared) {
      const ClassDecl* target = site_class(ctx, ins.sites.front().second);
      const SourceFile* file = ctx.project.file_of(*target);
      // constant listener attribute after the last field of the class
      std::size_t pos = target->body.begin + 1;
      const Node* last_field = nullptr;
      for (const Node* m : target->members)
        if (is<FieldDecl>(m)) last_field = m;
      if (last_field) pos = line_end(file->text, last_field->span.end);
      std::string indent = "  ";
      if (last_field)
        indent = indent_at(file->text, last_field->span.begin);
      else if (!target->members.empty())
        indent = indent_at(file->text, target->members[0]->span.begin);
      const Command& cmd = *ins.command;
      std::ostringstream field;
      field << indent << "final " << cmd.owner->spec->simple_name() << " " << ins.constant_name
            << " = " << listener_text(ins, indent) << ";\n";
      if (pos == target->body.begin + 1 && pos < file->text.size() && file->text[pos] == '\n') {
        ++pos;  // start on the line after the opening brace
      }
      add(file, {pos, pos}, field.str());
      for (const auto& [w, call] : ins.sites) {
        const SourceFile* site_file = ctx.project.file_of(*call);
        const ExprStmt* stmt = site_statement(call);
        Span span = full_lines(site_file->text, stmt->span);
        std::string site_indent = indent_at(site_file->text, stmt->span.begin);
        std::string recv = site_file->slice(call->receiver->span);
        add(site_file, span,
            site_indent + recv + "." + call->name + "(" + ins.constant_name + ");\n");
      }
      return;
    }
    for (const auto& [w, call] : ins.sites) {
      const SourceFile* site_file = ctx.project.file_of(*call);
      const ExprStmt* stmt = site_statement(call);
      Span span = full_lines(site_file->text, stmt->span);
      std::string indent = indent_at(site_file->text, stmt->span.begin);
      std::string recv = site_file->slice(call->receiver->span);
      std::string text = listener_text(ins, indent);
      add(site_file, span, indent + recv + "." + call->name + "(" + text + ");\n");
    }
  }

  void removal_edits() {
    const ListenerImpl& listener = *plan.blob.listener;
    const SourceFile* file = listener.file;
    for (const MethodDecl* m : plan.removed_handlers)
      add(file, full_lines(file->text, m->span, /*swallow_blank=*/true), "");
    if (plan.implements_entry) {
      const ClassDecl* cls = listener.owner;
      if (plan.remove_whole_implements) {
        std::size_t begin = cls->implements_kw.begin;
        while (begin > 0 && (file->text[begin - 1] == ' ' || file->text[begin - 1] == '\t' ||
                             file->text[begin - 1] == '\n' || file->text[begin - 1] == '\r'))
          --begin;
        add(file, {begin, plan.implements_entry->span.end}, "");
      } else {
        const auto& list = cls->implements;
        auto it = std::find(list.begin(), list.end(), plan.implements_entry);
        std::size_t index = static_cast<std::size_t>(it - list.begin());
        if (index == 0)
          add(file, {list[0]->span.begin, list[1]->span.begin}, "");
        else
          add(file, {list[index - 1]->span.end, list[index]->span.end}, "");
      }
    }
    for (const Node* stmt : plan.dead_setter_stmts) {
      const SourceFile* f = ctx.project.file_of(*stmt);
      add(f, full_lines(f->text, stmt->span, /*swallow_blank=*/true), "");
    }
  }

  void attribute_copy_edits() {
    if (plan.attribute_copies.empty()) return;
    // anchor the copies at the earliest rewritten registration in the target
    for (const AttributeCopy& copy : plan.attribute_copies) {
      const SourceFile* target_file = ctx.project.file_of(*copy.target);
      const SourceFile* blob_file = plan.blob.listener->file;
      // field declaration after the last existing field
      const Node* last_field = nullptr;
      for (const Node* m : copy.target->members)
        if (is<FieldDecl>(m)) last_field = m;
      std::size_t field_pos = last_field ? line_end(target_file->text, last_field->span.end)
                                         : copy.target->body.begin + 1;
      std::string indent =
          last_field ? indent_at(target_file->text, last_field->span.begin) : "  ";
      add(target_file, {field_pos, field_pos},
          reindent(*blob_file, copy.field->span, indent) + "\n");
      if (copy.init_statements.empty()) continue;
      const MethodCall* first_site = nullptr;
      for (const ListenerInsertion& ins : plan.insertions)
        for (const auto& [w, call] : ins.sites) {
          if (site_class(ctx, call) != copy.target) continue;
          if (!first_site || call->span.begin < first_site->span.begin) first_site = call;
        }
      if (!first_site) continue;
      const ExprStmt* stmt = site_statement(first_site);
      std::size_t pos = line_start(target_file->text, stmt->span.begin);
      std::string stmt_indent = indent_at(target_file->text, stmt->span.begin);
      std::ostringstream block;
      for (const Node* s : copy.init_statements)
        block << reindent(*blob_file, s->span, stmt_indent) << "\n";
      add(target_file, {pos, pos}, block.str());
    }
  }
};

}  // namespace

std::vector<FileEdits> emit_edits(const AnalysisContext& ctx, const RefactorPlan& plan) {
  Emitter emitter{ctx, plan, {}};
  for (const ListenerInsertion& ins : plan.insertions) emitter.insertion_edits(ins);
  emitter.removal_edits();
  emitter.attribute_copy_edits();

  std::vector<FileEdits> out;
  for (auto& [file, edits] : emitter.edits) {
    // merge insertions at identical offsets (field + init block)
    std::sort(edits.begin(), edits.end(), [](const TextEdit& a, const TextEdit& b) {
      return a.span.begin < b.span.begin;
    });
    std::vector<TextEdit> merged;
    for (auto& e : edits) {
      if (!merged.empty() && merged.back().span.empty() && e.span.empty() &&
          merged.back().span.begin == e.span.begin) {
        merged.back().replacement += e.replacement;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::sort(merged.begin(), merged.end(), [](const TextEdit& a, const TextEdit& b) {
      return a.span.begin > b.span.begin;  // right-to-left
    });
    out.push_back({file, std::move(merged)});
  }
  std::sort(out.begin(), out.end(),
            [](const FileEdits& a, const FileEdits& b) { return a.file->path < b.file->path; });
  return out;
}

}  // namespace bloblint
