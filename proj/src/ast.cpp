#include "bloblint/ast.hpp"

#include <algorithm>

namespace bloblint {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::CompilationUnit: return "CompilationUnit";
    case NodeKind::PackageDecl: return "PackageDecl";
    case NodeKind::ImportDecl: return "ImportDecl";
    case NodeKind::ClassDecl: return "ClassDecl";
    case NodeKind::InterfaceDecl: return "InterfaceDecl";
    case NodeKind::FieldDecl: return "FieldDecl";
    case NodeKind::MethodDecl: return "MethodDecl";
    case NodeKind::ConstructorDecl: return "ConstructorDecl";
    case NodeKind::ParamDecl: return "ParamDecl";
    case NodeKind::VarDeclarator: return "VarDeclarator";
    case NodeKind::TypeRef: return "TypeRef";
    case NodeKind::Block: return "Block";
    case NodeKind::IfStmt: return "IfStmt";
    case NodeKind::SwitchStmt: return "SwitchStmt";
    case NodeKind::SwitchCase: return "SwitchCase";
    case NodeKind::ForStmt: return "ForStmt";
    case NodeKind::ForEachStmt: return "ForEachStmt";
    case NodeKind::WhileStmt: return "WhileStmt";
    case NodeKind::ReturnStmt: return "ReturnStmt";
    case NodeKind::BreakStmt: return "BreakStmt";
    case NodeKind::LocalVarDecl: return "LocalVarDecl";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::TryStmt: return "TryStmt";
    case NodeKind::Opaque: return "Opaque";
    case NodeKind::Identifier: return "Identifier";
    case NodeKind::FieldAccess: return "FieldAccess";
    case NodeKind::MethodCall: return "MethodCall";
    case NodeKind::Assign: return "Assign";
    case NodeKind::Binary: return "Binary";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Ternary: return "Ternary";
    case NodeKind::InstanceOf: return "InstanceOf";
    case NodeKind::Cast: return "Cast";
    case NodeKind::New: return "New";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::StringLit: return "StringLit";
    case NodeKind::CharLit: return "CharLit";
    case NodeKind::NumberLit: return "NumberLit";
    case NodeKind::BoolLit: return "BoolLit";
    case NodeKind::NullLit: return "NullLit";
  }
  return "?";
}

bool Opaque::mentions(const std::string& name) const {
  return std::binary_search(idents.begin(), idents.end(), name);
}

void for_each_child(const Node& n, const std::function<void(const Node&)>& fn) {
  auto visit = [&fn](const Node* c) {
    if (c) fn(*c);
  };
  switch (n.kind) {
    case NodeKind::CompilationUnit: {
      const auto& u = static_cast<const CompilationUnit&>(n);
      visit(u.package);
      for (auto* c : u.imports) visit(c);
      for (auto* c : u.types) visit(c);
      break;
    }
    case NodeKind::ClassDecl: {
      const auto& d = static_cast<const ClassDecl&>(n);
      visit(d.extends);
      for (auto* c : d.implements) visit(c);
      for (auto* c : d.members) visit(c);
      break;
    }
    case NodeKind::InterfaceDecl: {
      const auto& d = static_cast<const InterfaceDecl&>(n);
      for (auto* c : d.extends) visit(c);
      for (auto* c : d.members) visit(c);
      break;
    }
    case NodeKind::FieldDecl: {
      const auto& d = static_cast<const FieldDecl&>(n);
      visit(d.type);
      for (auto* c : d.vars) visit(c);
      break;
    }
    case NodeKind::MethodDecl: {
      const auto& d = static_cast<const MethodDecl&>(n);
      visit(d.ret);
      for (auto* c : d.params) visit(c);
      visit(d.body);
      break;
    }
    case NodeKind::ConstructorDecl: {
      const auto& d = static_cast<const ConstructorDecl&>(n);
      for (auto* c : d.params) visit(c);
      visit(d.body);
      break;
    }
    case NodeKind::ParamDecl:
      visit(static_cast<const ParamDecl&>(n).type);
      break;
    case NodeKind::VarDeclarator:
      visit(static_cast<const VarDeclarator&>(n).init);
      break;
    case NodeKind::Block:
      for (auto* c : static_cast<const Block&>(n).stmts) visit(c);
      break;
    case NodeKind::IfStmt: {
      const auto& s = static_cast<const IfStmt&>(n);
      visit(s.cond);
      visit(s.then_stmt);
      visit(s.else_stmt);
      break;
    }
    case NodeKind::SwitchStmt: {
      const auto& s = static_cast<const SwitchStmt&>(n);
      visit(s.scrutinee);
      for (auto* c : s.cases) visit(c);
      break;
    }
    case NodeKind::SwitchCase: {
      const auto& s = static_cast<const SwitchCase&>(n);
      visit(s.label);
      for (auto* c : s.stmts) visit(c);
      break;
    }
    case NodeKind::ForStmt: {
      const auto& s = static_cast<const ForStmt&>(n);
      for (auto* c : s.init) visit(c);
      visit(s.cond);
      for (auto* c : s.updates) visit(c);
      visit(s.body);
      break;
    }
    case NodeKind::ForEachStmt: {
      const auto& s = static_cast<const ForEachStmt&>(n);
      visit(s.decl);
      visit(s.iterable);
      visit(s.body);
      break;
    }
    case NodeKind::WhileStmt: {
      const auto& s = static_cast<const WhileStmt&>(n);
      visit(s.cond);
      visit(s.body);
      break;
    }
    case NodeKind::ReturnStmt:
      visit(static_cast<const ReturnStmt&>(n).value);
      break;
    case NodeKind::LocalVarDecl: {
      const auto& d = static_cast<const LocalVarDecl&>(n);
      visit(d.type);
      for (auto* c : d.vars) visit(c);
      break;
    }
    case NodeKind::ExprStmt:
      visit(static_cast<const ExprStmt&>(n).expr);
      break;
    case NodeKind::TryStmt: {
      const auto& s = static_cast<const TryStmt&>(n);
      visit(s.body);
      for (auto* c : s.handlers) visit(c);
      break;
    }
    case NodeKind::FieldAccess:
      visit(static_cast<const FieldAccess&>(n).base);
      break;
    case NodeKind::MethodCall: {
      const auto& e = static_cast<const MethodCall&>(n);
      visit(e.receiver);
      for (auto* c : e.args) visit(c);
      break;
    }
    case NodeKind::Assign: {
      const auto& e = static_cast<const Assign&>(n);
      visit(e.target);
      visit(e.value);
      break;
    }
    case NodeKind::Binary: {
      const auto& e = static_cast<const Binary&>(n);
      visit(e.lhs);
      visit(e.rhs);
      break;
    }
    case NodeKind::Unary:
      visit(static_cast<const Unary&>(n).operand);
      break;
    case NodeKind::Ternary: {
      const auto& e = static_cast<const Ternary&>(n);
      visit(e.cond);
      visit(e.then_expr);
      visit(e.else_expr);
      break;
    }
    case NodeKind::InstanceOf: {
      const auto& e = static_cast<const InstanceOf&>(n);
      visit(e.value);
      visit(e.type);
      break;
    }
    case NodeKind::Cast: {
      const auto& e = static_cast<const Cast&>(n);
      visit(e.type);
      visit(e.value);
      break;
    }
    case NodeKind::New: {
      const auto& e = static_cast<const New&>(n);
      visit(e.type);
      for (auto* c : e.args) visit(c);
      for (auto* c : e.anon_members) visit(c);
      break;
    }
    case NodeKind::Lambda: {
      const auto& e = static_cast<const Lambda&>(n);
      for (auto* c : e.params) visit(c);
      visit(e.body);
      break;
    }
    default:
      break;  // leaves
  }
}

void walk(const Node& n, const std::function<void(const Node&)>& fn) {
  fn(n);
  for_each_child(n, [&fn](const Node& c) { walk(c, fn); });
}

bool mentions_name(const Node& n, const std::string& name) {
  bool found = false;
  walk(n, [&](const Node& c) {
    if (found) return;
    switch (c.kind) {
      case NodeKind::Identifier:
        found = static_cast<const Identifier&>(c).name == name;
        break;
      case NodeKind::FieldAccess:
        found = static_cast<const FieldAccess&>(c).name == name;
        break;
      case NodeKind::MethodCall:
        found = static_cast<const MethodCall&>(c).name == name;
        break;
      case NodeKind::Opaque:
        found = static_cast<const Opaque&>(c).mentions(name);
        break;
      default:
        break;
    }
  });
  return found;
}

void SyntaxTree::link_parents() {
  if (!root) return;
  // Iterative to avoid mutable-lambda recursion gymnastics.
  std::vector<Node*> stack = {root};
  while (!stack.empty()) {
    Node* cur = stack.back();
    stack.pop_back();
    for_each_child(*cur, [&](const Node& child) {
      const_cast<Node&>(child).parent = cur;
      stack.push_back(const_cast<Node*>(&child));
    });
  }
}

}  // namespace bloblint
