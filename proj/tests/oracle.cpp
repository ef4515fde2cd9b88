#include "oracle.hpp"

#include <set>

namespace bloblint::testing {

namespace {

void idents_in(const Node& n, std::set<std::string>& out) {
  if (const auto* id = as<Identifier>(&n)) out.insert(id->name);
  if (const auto* op = as<Opaque>(&n)) out.insert(op->idents.begin(), op->idents.end());
  for_each_child(n, [&](const Node& c) { idents_in(c, out); });
}

bool uses_any(const Node& n, const std::set<std::string>& names) {
  std::set<std::string> used;
  idents_in(n, used);
  for (const auto& name : names)
    if (used.count(name)) return true;
  return false;
}

// Transitive closure over (target, source-expression) pairs.
std::set<std::string> taint_closure(const Node& body, const std::string& seed) {
  std::vector<std::pair<std::string, const Node*>> flows;
  std::set<std::string> locals = {seed};
  walk(body, [&](const Node& n) {
    if (const auto* d = as<LocalVarDecl>(&n))
      for (const VarDeclarator* v : d->vars) {
        locals.insert(v->name);
        if (v->init) flows.emplace_back(v->name, v->init);
      }
    if (const auto* a = as<Assign>(&n))
      if (const auto* id = as<Identifier>(a->target)) flows.emplace_back(id->name, a->value);
  });
  std::set<std::string> tainted = {seed};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [target, source] : flows) {
      if (!locals.count(target) || tainted.count(target)) continue;
      if (uses_any(*source, tainted)) {
        tainted.insert(target);
        changed = true;
      }
    }
  }
  return tainted;
}

std::vector<const Node*> stmts_of(const Node* n) {
  if (!n) return {};
  if (const auto* b = as<Block>(n)) return {b->stmts.begin(), b->stmts.end()};
  return {n};
}

bool cond_is_ed(const Node& n, const std::set<std::string>& tainted) {
  if (const auto* i = as<IfStmt>(&n)) return i->cond && uses_any(*i->cond, tainted);
  if (const auto* s = as<SwitchStmt>(&n)) return s->scrutinee && uses_any(*s->scrutinee, tainted);
  return false;
}

bool subtree_has_ed(const Node& n, const std::set<std::string>& tainted) {
  bool found = cond_is_ed(n, tainted);
  if (found) return true;
  for_each_child(n, [&](const Node& c) {
    if (!found && subtree_has_ed(c, tainted)) found = true;
  });
  return found;
}

bool stmts_have_ed(const std::vector<const Node*>& stmts, const std::set<std::string>& tainted) {
  for (const Node* s : stmts)
    if (subtree_has_ed(*s, tainted)) return true;
  return false;
}

struct Enumerator {
  const Project& project;
  const std::set<std::string>& tainted;
  std::vector<OracleLeaf>& leaves;

  void leaf(const Node* branch, int count) {
    if (count == 0) return;  // empty branch blocks are not commands
    leaves.push_back({false, branch, count});
  }

  void stmts(const std::vector<const Node*>& list) {
    for (const Node* s : list) stmt(s);
  }

  void stmt(const Node* s) {
    if (!s) return;
    switch (s->kind) {
      case NodeKind::IfStmt: {
        // walk the whole else-if chain directly
        std::vector<const IfStmt*> arms;
        std::vector<const Node*> final_else;
        for (const IfStmt* cur = static_cast<const IfStmt*>(s); cur;) {
          arms.push_back(cur);
          if (const auto* next = as<IfStmt>(cur->else_stmt)) {
            cur = next;
          } else {
            final_else = stmts_of(cur->else_stmt);
            cur = nullptr;
          }
        }
        bool last_was_leaf = false;
        std::size_t last_leaf_index = 0;
        for (const IfStmt* arm : arms) {
          auto block = stmts_of(arm->then_stmt);
          if (arm->cond && uses_any(*arm->cond, tainted)) {
            if (stmts_have_ed(block, tainted)) {
              stmts(block);
              last_was_leaf = false;
            } else {
              leaf(arm, static_cast<int>(block.size()));
              last_was_leaf = !block.empty();
              if (last_was_leaf) last_leaf_index = leaves.size() - 1;
            }
          } else {
            stmts(block);
            last_was_leaf = false;
          }
        }
        if (!final_else.empty()) {
          if (stmts_have_ed(final_else, tainted))
            stmts(final_else);
          else if (last_was_leaf)
            leaves[last_leaf_index].main_count += static_cast<int>(final_else.size());
        }
        return;
      }
      case NodeKind::SwitchStmt: {
        const auto* sw = static_cast<const SwitchStmt*>(s);
        bool ed = sw->scrutinee && uses_any(*sw->scrutinee, tainted);
        bool last_was_leaf = false;
        std::size_t last_leaf_index = 0;
        for (const SwitchCase* c : sw->cases) {
          std::vector<const Node*> body(c->stmts.begin(), c->stmts.end());
          if (!ed) {
            stmts(body);
            continue;
          }
          if (!c->label) {
            if (stmts_have_ed(body, tainted))
              stmts(body);
            else if (last_was_leaf)
              leaves[last_leaf_index].main_count += static_cast<int>(body.size());
            continue;
          }
          if (stmts_have_ed(body, tainted)) {
            stmts(body);
            last_was_leaf = false;
          } else {
            leaf(c, static_cast<int>(body.size()));
            last_was_leaf = !body.empty();
            if (last_was_leaf) last_leaf_index = leaves.size() - 1;
          }
        }
        return;
      }
      case NodeKind::Block:
        stmts(stmts_of(s));
        return;
      case NodeKind::ForStmt:
        stmt(static_cast<const ForStmt*>(s)->body);
        return;
      case NodeKind::ForEachStmt:
        stmt(static_cast<const ForEachStmt*>(s)->body);
        return;
      case NodeKind::WhileStmt:
        stmt(static_cast<const WhileStmt*>(s)->body);
        return;
      case NodeKind::TryStmt:
        stmt(static_cast<const TryStmt*>(s)->body);
        return;
      default:
        return;
    }
  }
};

// Global name+arity method lookup; oracle fixtures keep method names unique.
const MethodDecl* find_method_anywhere(const Project& project, const std::string& name,
                                       std::size_t arity) {
  const MethodDecl* found = nullptr;
  for (const auto& file : project.files) {
    walk(*file->tree.root, [&](const Node& n) {
      if (found) return;
      if (const auto* m = as<MethodDecl>(&n))
        if (m->name == name && m->params.size() == arity && m->body) found = m;
    });
    if (found) break;
  }
  return found;
}

void enumerate_body(const Project& project, const Node* body, const std::string& param,
                    int depth_left, std::set<const MethodDecl*>& visited,
                    std::vector<OracleLeaf>& leaves) {
  std::set<std::string> tainted = taint_closure(*body, param);
  Enumerator en{project, tainted, leaves};
  en.stmts(stmts_of(body));

  if (depth_left <= 0) return;
  walk(*body, [&](const Node& n) {
    const auto* call = as<MethodCall>(&n);
    if (!call) return;
    for (std::size_t i = 0; i < call->args.size(); ++i) {
      if (!uses_any(*call->args[i], tainted)) continue;
      const MethodDecl* target = find_method_anywhere(project, call->name, call->args.size());
      if (!target || visited.count(target)) return;
      if (i >= target->params.size()) return;
      visited.insert(target);
      enumerate_body(project, target->body, target->params[i]->name, depth_left - 1, visited,
                     leaves);
      return;
    }
  });
}

}  // namespace

std::vector<OracleLeaf> oracle_commands(const Project& project, const ListenerImpl& listener,
                                        int dispatch_depth) {
  std::vector<OracleLeaf> all;
  for (const Handler& h : listener.handlers) {
    std::vector<OracleLeaf> leaves;
    std::set<const MethodDecl*> visited;
    enumerate_body(project, h.body, h.event_param, dispatch_depth, visited, leaves);
    if (leaves.empty()) {
      OracleLeaf wb;
      wb.whole_body = true;
      wb.main_count = static_cast<int>(stmts_of(h.body).size());
      if (wb.main_count > 0) leaves.push_back(wb);
    }
    all.insert(all.end(), leaves.begin(), leaves.end());
  }
  return all;
}

}  // namespace bloblint::testing
