#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bloblint/source.hpp"

namespace bloblint {

enum class NodeKind {
  CompilationUnit,
  PackageDecl,
  ImportDecl,
  ClassDecl,
  InterfaceDecl,
  FieldDecl,
  MethodDecl,
  ConstructorDecl,
  ParamDecl,
  VarDeclarator,
  TypeRef,
  Block,
  IfStmt,
  SwitchStmt,
  SwitchCase,
  ForStmt,
  ForEachStmt,
  WhileStmt,
  ReturnStmt,
  BreakStmt,
  LocalVarDecl,
  ExprStmt,
  TryStmt,
  Opaque,  // unsupported construct; carries the identifier token set
  Identifier,
  FieldAccess,
  MethodCall,
  Assign,
  Binary,
  Unary,
  Ternary,
  InstanceOf,
  Cast,
  New,
  Lambda,
  StringLit,
  CharLit,
  NumberLit,
  BoolLit,
  NullLit,
};

const char* node_kind_name(NodeKind k);

struct Node {
  NodeKind kind;
  Span span;
  const Node* parent = nullptr;

  explicit Node(NodeKind k) : kind(k) {}
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
};

template <class T>
const T* as(const Node* n) {
  return n && n->kind == T::kKind ? static_cast<const T*>(n) : nullptr;
}
template <class T>
T* as(Node* n) {
  return n && n->kind == T::kKind ? static_cast<T*>(n) : nullptr;
}
template <class T>
bool is(const Node* n) {
  return n && n->kind == T::kKind;
}

// --- declarations -----------------------------------------------------------

struct TypeRef final : Node {
  static constexpr NodeKind kKind = NodeKind::TypeRef;
  std::string name;  // dotted base name without generics/dims, e.g. "javax.swing.JButton"
  std::string text;  // full source text incl. generics and []
  int dims = 0;
  TypeRef() : Node(kKind) {}
  std::string simple() const {
    auto pos = name.rfind('.');
    return pos == std::string::npos ? name : name.substr(pos + 1);
  }
};

struct CompilationUnit final : Node {
  static constexpr NodeKind kKind = NodeKind::CompilationUnit;
  Node* package = nullptr;
  std::vector<Node*> imports;
  std::vector<Node*> types;  // ClassDecl / InterfaceDecl / Opaque
  CompilationUnit() : Node(kKind) {}
};

struct PackageDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::PackageDecl;
  std::string name;
  PackageDecl() : Node(kKind) {}
};

struct ImportDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::ImportDecl;
  std::string path;  // without trailing ".*"
  bool is_static = false;
  bool is_star = false;
  ImportDecl() : Node(kKind) {}
};

enum Modifier : unsigned {
  kModPublic = 1u << 0,
  kModPrivate = 1u << 1,
  kModProtected = 1u << 2,
  kModStatic = 1u << 3,
  kModFinal = 1u << 4,
  kModAbstract = 1u << 5,
};

struct ClassDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::ClassDecl;
  std::string name;
  unsigned mods = 0;
  TypeRef* extends = nullptr;
  std::vector<TypeRef*> implements;
  Span implements_kw;  // span of the "implements" keyword, empty if absent
  std::vector<Node*> members;
  Span body;  // the {...} span
  ClassDecl() : Node(kKind) {}
};

struct InterfaceDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::InterfaceDecl;
  std::string name;
  unsigned mods = 0;
  std::vector<TypeRef*> extends;
  std::vector<Node*> members;
  InterfaceDecl() : Node(kKind) {}
};

struct VarDeclarator final : Node {
  static constexpr NodeKind kKind = NodeKind::VarDeclarator;
  std::string name;
  Node* init = nullptr;  // expression, may be null
  VarDeclarator() : Node(kKind) {}
};

struct FieldDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::FieldDecl;
  unsigned mods = 0;
  TypeRef* type = nullptr;
  std::vector<VarDeclarator*> vars;
  FieldDecl() : Node(kKind) {}
};

struct ParamDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::ParamDecl;
  TypeRef* type = nullptr;  // null for untyped lambda params
  std::string name;
  ParamDecl() : Node(kKind) {}
};

struct Block;

struct MethodDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::MethodDecl;
  unsigned mods = 0;
  TypeRef* ret = nullptr;
  std::string name;
  std::vector<ParamDecl*> params;
  Block* body = nullptr;  // null when abstract / interface method
  MethodDecl() : Node(kKind) {}
};

struct ConstructorDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::ConstructorDecl;
  unsigned mods = 0;
  std::string name;
  std::vector<ParamDecl*> params;
  Block* body = nullptr;
  ConstructorDecl() : Node(kKind) {}
};

// --- statements --------------------------------------------------------------

struct Block final : Node {
  static constexpr NodeKind kKind = NodeKind::Block;
  std::vector<Node*> stmts;
  Block() : Node(kKind) {}
};

struct IfStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::IfStmt;
  Node* cond = nullptr;
  Node* then_stmt = nullptr;
  Node* else_stmt = nullptr;  // an else-if chain nests IfStmt here
  IfStmt() : Node(kKind) {}
};

struct SwitchCase final : Node {
  static constexpr NodeKind kKind = NodeKind::SwitchCase;
  Node* label = nullptr;  // null for "default:"
  std::vector<Node*> stmts;
  SwitchCase() : Node(kKind) {}
};

struct SwitchStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::SwitchStmt;
  Node* scrutinee = nullptr;
  std::vector<SwitchCase*> cases;
  SwitchStmt() : Node(kKind) {}
};

struct ForStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::ForStmt;
  std::vector<Node*> init;     // LocalVarDecl or expressions
  Node* cond = nullptr;        // may be null
  std::vector<Node*> updates;  // expressions
  Node* body = nullptr;
  ForStmt() : Node(kKind) {}
};

struct LocalVarDecl;

struct ForEachStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::ForEachStmt;
  LocalVarDecl* decl = nullptr;
  Node* iterable = nullptr;
  Node* body = nullptr;
  ForEachStmt() : Node(kKind) {}
};

struct WhileStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::WhileStmt;
  Node* cond = nullptr;
  Node* body = nullptr;
  WhileStmt() : Node(kKind) {}
};

struct ReturnStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::ReturnStmt;
  Node* value = nullptr;  // may be null
  ReturnStmt() : Node(kKind) {}
};

struct BreakStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::BreakStmt;
  BreakStmt() : Node(kKind) {}
};

struct LocalVarDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::LocalVarDecl;
  unsigned mods = 0;
  TypeRef* type = nullptr;
  std::vector<VarDeclarator*> vars;
  LocalVarDecl() : Node(kKind) {}
};

struct ExprStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::ExprStmt;
  Node* expr = nullptr;
  ExprStmt() : Node(kKind) {}
};

struct TryStmt final : Node {
  static constexpr NodeKind kKind = NodeKind::TryStmt;
  Block* body = nullptr;
  std::vector<Node*> handlers;  // catch/finally bodies kept as Opaque
  TryStmt() : Node(kKind) {}
};

struct Opaque final : Node {
  static constexpr NodeKind kKind = NodeKind::Opaque;
  std::vector<std::string> idents;  // sorted, unique word tokens in the region
  Opaque() : Node(kKind) {}
  bool mentions(const std::string& name) const;
};

// --- expressions -------------------------------------------------------------

struct Identifier final : Node {
  static constexpr NodeKind kKind = NodeKind::Identifier;
  std::string name;  // includes "this" and "super"
  Identifier() : Node(kKind) {}
};

struct FieldAccess final : Node {
  static constexpr NodeKind kKind = NodeKind::FieldAccess;
  Node* base = nullptr;
  std::string name;
  FieldAccess() : Node(kKind) {}
};

struct MethodCall final : Node {
  static constexpr NodeKind kKind = NodeKind::MethodCall;
  Node* receiver = nullptr;  // null for unqualified calls
  std::string name;
  std::vector<Node*> args;
  MethodCall() : Node(kKind) {}
};

struct Assign final : Node {
  static constexpr NodeKind kKind = NodeKind::Assign;
  Node* target = nullptr;
  std::string op;  // "=", "+=", ...
  Node* value = nullptr;
  Assign() : Node(kKind) {}
};

struct Binary final : Node {
  static constexpr NodeKind kKind = NodeKind::Binary;
  Node* lhs = nullptr;
  std::string op;
  Node* rhs = nullptr;
  Binary() : Node(kKind) {}
};

struct Unary final : Node {
  static constexpr NodeKind kKind = NodeKind::Unary;
  std::string op;
  bool prefix = true;
  Node* operand = nullptr;
  Unary() : Node(kKind) {}
};

struct Ternary final : Node {
  static constexpr NodeKind kKind = NodeKind::Ternary;
  Node* cond = nullptr;
  Node* then_expr = nullptr;
  Node* else_expr = nullptr;
  Ternary() : Node(kKind) {}
};

struct InstanceOf final : Node {
  static constexpr NodeKind kKind = NodeKind::InstanceOf;
  Node* value = nullptr;
  TypeRef* type = nullptr;
  InstanceOf() : Node(kKind) {}
};

struct Cast final : Node {
  static constexpr NodeKind kKind = NodeKind::Cast;
  TypeRef* type = nullptr;
  Node* value = nullptr;
  Cast() : Node(kKind) {}
};

struct New final : Node {
  static constexpr NodeKind kKind = NodeKind::New;
  TypeRef* type = nullptr;
  std::vector<Node*> args;
  bool is_anon = false;
  std::vector<Node*> anon_members;
  New() : Node(kKind) {}
};

struct Lambda final : Node {
  static constexpr NodeKind kKind = NodeKind::Lambda;
  std::vector<ParamDecl*> params;
  Node* body = nullptr;  // Block or expression
  Lambda() : Node(kKind) {}
};

struct StringLit final : Node {
  static constexpr NodeKind kKind = NodeKind::StringLit;
  std::string value;  // decoded
  StringLit() : Node(kKind) {}
};

struct CharLit final : Node {
  static constexpr NodeKind kKind = NodeKind::CharLit;
  std::string value;
  CharLit() : Node(kKind) {}
};

struct NumberLit final : Node {
  static constexpr NodeKind kKind = NodeKind::NumberLit;
  std::string text;
  NumberLit() : Node(kKind) {}
};

struct BoolLit final : Node {
  static constexpr NodeKind kKind = NodeKind::BoolLit;
  bool value = false;
  BoolLit() : Node(kKind) {}
};

struct NullLit final : Node {
  static constexpr NodeKind kKind = NodeKind::NullLit;
  NullLit() : Node(kKind) {}
};

// --- tree --------------------------------------------------------------------

class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(SyntaxTree&&) = default;
  SyntaxTree& operator=(SyntaxTree&&) = default;

  template <class T>
  T* make() {
    auto node = std::make_unique<T>();
    T* raw = node.get();
    arena_.push_back(std::move(node));
    return raw;
  }

  CompilationUnit* root = nullptr;

  // Called once after parsing; wires parent pointers.
  void link_parents();

 private:
  std::vector<std::unique_ptr<Node>> arena_;
};

// Invokes fn on each direct child of n, in source order.
void for_each_child(const Node& n, const std::function<void(const Node&)>& fn);

// Preorder walk of n and all descendants.
void walk(const Node& n, const std::function<void(const Node&)>& fn);

// True if `name` occurs as an identifier, field name, call name, or opaque
// token anywhere under n (n included).
bool mentions_name(const Node& n, const std::string& name);

}  // namespace bloblint
