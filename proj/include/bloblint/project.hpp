#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bloblint/ast.hpp"
#include "bloblint/source.hpp"

namespace bloblint {

struct SourceFile {
  std::string path;  // relative to the project root
  std::string text;
  SyntaxTree tree;
  LineIndex lines;

  std::string slice(Span s) const { return text.substr(s.begin, s.begin <= text.size() ? std::min(s.end, text.size()) - s.begin : 0); }
  int line_of(std::size_t offset) const { return lines.line_of(offset); }
};

struct ClassInfo {
  const ClassDecl* decl = nullptr;
  const SourceFile* file = nullptr;
};

// A parsed source corpus plus the cross-file class index.
struct Project {
  std::vector<std::unique_ptr<SourceFile>> files;
  std::map<std::string, ClassInfo> classes;  // by simple name, first wins
  std::vector<std::string> warnings;

  const ClassInfo* find_class(const std::string& simple_name) const {
    auto it = classes.find(simple_name);
    return it == classes.end() ? nullptr : &it->second;
  }
  const SourceFile* file_of(const Node& n) const;
  const ClassDecl* enclosing_class(const Node& n) const;
  const Node* enclosing_method(const Node& n) const;  // MethodDecl/ConstructorDecl/Lambda

  // Builds a project from in-memory sources; used by tests and the fixture
  // generator. Throws on parse errors.
  static Project from_sources(const std::vector<std::pair<std::string, std::string>>& sources);
};

// Recursively loads `*.java` under root (sorted by path), skipping paths that
// match any exclude glob ('*' wildcards, matched against the relative path).
// jobs > 1 parses files in parallel; results are deterministic either way.
Project load_project(const std::string& root, const std::vector<std::string>& excludes = {},
                     int jobs = 1);

bool glob_match(const std::string& pattern, const std::string& path);

// Declared-type lookup for an expression in its lexical context:
// identifiers resolve against enclosing locals/params/fields, field accesses
// against the base's declared type. Returns the TypeRef or null.
const TypeRef* declared_type(const Project& project, const Node& expr);

// Best-effort resolution of an expression to the field/local declarator it
// names. Returns the VarDeclarator and the class that owns it (null for locals).
struct VarRef {
  const VarDeclarator* var = nullptr;
  const TypeRef* type = nullptr;
  const ClassDecl* owner = nullptr;  // null when the variable is a local/param
  bool is_field = false;
};
VarRef resolve_var(const Project& project, const Node& expr);

}  // namespace bloblint
