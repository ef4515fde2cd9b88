#include "bloblint/project.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "bloblint/errors.hpp"
#include "bloblint/parser.hpp"

namespace fs = std::filesystem;

namespace bloblint {

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void index_project(Project& project) {
  for (const auto& file : project.files) {
    if (!file->tree.root) continue;
    walk(*file->tree.root, [&](const Node& n) {
      const auto* cls = as<ClassDecl>(&n);
      if (!cls) return;
      auto [it, inserted] = project.classes.emplace(cls->name, ClassInfo{cls, file.get()});
      if (!inserted)
        project.warnings.push_back("duplicate class name '" + cls->name +
                                   "' (" + file->path + " shadows " +
                                   it->second.file->path + ")");
    });
  }
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& path) {
  // iterative '*'/'?' matcher
  std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < path.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == path[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

Project load_project(const std::string& root, const std::vector<std::string>& excludes,
                     int jobs) {
  std::vector<std::string> paths;
  fs::path base(root);
  if (!fs::exists(base)) throw std::runtime_error("no such directory: " + root);
  for (const auto& entry : fs::recursive_directory_iterator(base)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".java") continue;
    std::string rel = fs::relative(entry.path(), base).generic_string();
    bool excluded = false;
    for (const auto& glob : excludes)
      if (glob_match(glob, rel)) excluded = true;
    if (!excluded) paths.push_back(std::move(rel));
  }
  std::sort(paths.begin(), paths.end());

  std::vector<std::pair<std::string, std::string>> sources;
  sources.reserve(paths.size());
  for (const auto& rel : paths) sources.emplace_back(rel, read_file(base / rel));

  Project project;
  project.files.resize(sources.size());
  auto parse_one = [&sources](std::size_t i) {
    auto file = std::make_unique<SourceFile>();
    file->path = sources[i].first;
    file->text = std::move(sources[i].second);
    file->tree = parse(file->text);
    file->lines = LineIndex(file->text);
    return file;
  };
  if (jobs <= 1 || sources.size() < 2) {
    for (std::size_t i = 0; i < sources.size(); ++i) project.files[i] = parse_one(i);
  } else {
    std::vector<std::future<std::unique_ptr<SourceFile>>> futs(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i)
      futs[i] = std::async(std::launch::async, parse_one, i);
    for (std::size_t i = 0; i < sources.size(); ++i) project.files[i] = futs[i].get();
  }
  index_project(project);
  return project;
}

Project Project::from_sources(const std::vector<std::pair<std::string, std::string>>& sources) {
  Project project;
  for (const auto& [path, text] : sources) {
    auto file = std::make_unique<SourceFile>();
    file->path = path;
    file->text = text;
    file->tree = parse(file->text);
    file->lines = LineIndex(file->text);
    project.files.push_back(std::move(file));
  }
  index_project(project);
  return project;
}

const SourceFile* Project::file_of(const Node& n) const {
  const Node* root = &n;
  while (root->parent) root = root->parent;
  for (const auto& file : files)
    if (file->tree.root == root) return file.get();
  return nullptr;
}

const ClassDecl* Project::enclosing_class(const Node& n) const {
  for (const Node* p = n.parent; p; p = p->parent)
    if (const auto* cls = as<ClassDecl>(p)) return cls;
  return nullptr;
}

const Node* Project::enclosing_method(const Node& n) const {
  for (const Node* p = n.parent; p; p = p->parent) {
    if (p->kind == NodeKind::MethodDecl || p->kind == NodeKind::ConstructorDecl ||
        p->kind == NodeKind::Lambda)
      return p;
  }
  return nullptr;
}

// --- name resolution ----------------------------------------------------------

namespace {

const FieldDecl* find_field(const Project& project, const ClassDecl* cls,
                            const std::string& name, const VarDeclarator** out_var,
                            const ClassDecl** out_owner, int depth = 0) {
  if (!cls || depth > 8) return nullptr;
  for (const Node* m : cls->members) {
    if (const auto* f = as<FieldDecl>(m)) {
      for (const VarDeclarator* v : f->vars) {
        if (v->name == name) {
          if (out_var) *out_var = v;
          if (out_owner) *out_owner = cls;
          return f;
        }
      }
    }
  }
  if (cls->extends) {
    if (const ClassInfo* super = project.find_class(cls->extends->simple()))
      if (super->decl != cls)
        return find_field(project, super->decl, name, out_var, out_owner, depth + 1);
  }
  return nullptr;
}

// Searches enclosing scopes (inner to outer) for a declaration of `name`
// visible at `at`. Param declarations yield var == null.
bool lookup_name(const Project& project, const Node& at, const std::string& name,
                 VarRef& out) {
  const Node* prev = &at;
  for (const Node* p = at.parent; p; prev = p, p = p->parent) {
    if (const auto* block = as<Block>(p)) {
      for (const Node* s : block->stmts) {
        if (s->span.begin >= prev->span.begin && s != prev) break;
        if (const auto* d = as<LocalVarDecl>(s)) {
          for (const VarDeclarator* v : d->vars) {
            if (v->name == name) {
              out = {v, d->type, nullptr, false};
              return true;
            }
          }
        }
      }
    }
    if (const auto* fe = as<ForEachStmt>(p)) {
      if (fe->decl && !fe->decl->vars.empty() && fe->decl->vars[0]->name == name) {
        out = {fe->decl->vars[0], fe->decl->type, nullptr, false};
        return true;
      }
    }
    if (const auto* fo = as<ForStmt>(p)) {
      for (const Node* init : fo->init) {
        if (const auto* d = as<LocalVarDecl>(init)) {
          for (const VarDeclarator* v : d->vars)
            if (v->name == name) {
              out = {v, d->type, nullptr, false};
              return true;
            }
        }
      }
    }
    if (const auto* m = as<MethodDecl>(p)) {
      for (const ParamDecl* param : m->params)
        if (param->name == name) {
          out = {nullptr, param->type, nullptr, false};
          return true;
        }
    }
    if (const auto* c = as<ConstructorDecl>(p)) {
      for (const ParamDecl* param : c->params)
        if (param->name == name) {
          out = {nullptr, param->type, nullptr, false};
          return true;
        }
    }
    if (const auto* l = as<Lambda>(p)) {
      for (const ParamDecl* param : l->params)
        if (param->name == name) {
          out = {nullptr, param->type, nullptr, false};
          return true;
        }
    }
    if (const auto* nw = as<New>(p); nw && nw->is_anon) {
      for (const Node* m : nw->anon_members) {
        if (const auto* f = as<FieldDecl>(m)) {
          for (const VarDeclarator* v : f->vars)
            if (v->name == name) {
              out = {v, f->type, nullptr, true};
              return true;
            }
        }
      }
    }
    if (const auto* cls = as<ClassDecl>(p)) {
      const VarDeclarator* var = nullptr;
      const ClassDecl* owner = nullptr;
      if (const FieldDecl* f = find_field(project, cls, name, &var, &owner)) {
        out = {var, f->type, owner, true};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

VarRef resolve_var(const Project& project, const Node& expr) {
  VarRef ref;
  if (const auto* id = as<Identifier>(&expr)) {
    if (id->name == "this" || id->name == "super") return ref;
    lookup_name(project, expr, id->name, ref);
    return ref;
  }
  if (const auto* fa = as<FieldAccess>(&expr)) {
    if (const auto* base_id = as<Identifier>(fa->base)) {
      if (base_id->name == "this") {
        const ClassDecl* cls = project.enclosing_class(expr);
        const VarDeclarator* var = nullptr;
        const ClassDecl* owner = nullptr;
        if (const FieldDecl* f = find_field(project, cls, fa->name, &var, &owner))
          ref = {var, f->type, owner, true};
        return ref;
      }
      VarRef base_ref;
      if (!lookup_name(project, expr, base_id->name, base_ref)) {
        // Class.FIELD static access
        if (const ClassInfo* ci = project.find_class(base_id->name)) {
          const VarDeclarator* var = nullptr;
          const ClassDecl* owner = nullptr;
          if (const FieldDecl* f = find_field(project, ci->decl, fa->name, &var, &owner))
            ref = {var, f->type, owner, true};
        }
        return ref;
      }
    }
    if (const TypeRef* base_type = declared_type(project, *fa->base)) {
      if (const ClassInfo* ci = project.find_class(base_type->simple())) {
        const VarDeclarator* var = nullptr;
        const ClassDecl* owner = nullptr;
        if (const FieldDecl* f = find_field(project, ci->decl, fa->name, &var, &owner))
          ref = {var, f->type, owner, true};
      }
    }
  }
  return ref;
}

const TypeRef* declared_type(const Project& project, const Node& expr) {
  switch (expr.kind) {
    case NodeKind::Identifier: {
      const auto& id = static_cast<const Identifier&>(expr);
      if (id.name == "this" || id.name == "super") return nullptr;
      VarRef ref;
      if (lookup_name(project, expr, id.name, ref)) return ref.type;
      return nullptr;
    }
    case NodeKind::FieldAccess:
      return resolve_var(project, expr).type;
    case NodeKind::Cast:
      return static_cast<const Cast&>(expr).type;
    case NodeKind::New:
      return static_cast<const New&>(expr).type;
    case NodeKind::MethodCall: {
      // project-local return types, through the receiver's declared type
      const auto& call = static_cast<const MethodCall&>(expr);
      const ClassDecl* target = nullptr;
      if (!call.receiver ||
          (is<Identifier>(call.receiver) &&
           static_cast<const Identifier*>(call.receiver)->name == "this")) {
        target = project.enclosing_class(expr);
      } else if (const TypeRef* rt = declared_type(project, *call.receiver)) {
        if (const ClassInfo* ci = project.find_class(rt->simple())) target = ci->decl;
      }
      for (int depth = 0; target && depth < 8; ++depth) {
        for (const Node* m : target->members) {
          if (const auto* method = as<MethodDecl>(m)) {
            if (method->name == call.name && method->params.size() == call.args.size())
              return method->ret;
          }
        }
        const ClassInfo* super =
            target->extends ? project.find_class(target->extends->simple()) : nullptr;
        target = super && super->decl != target ? super->decl : nullptr;
      }
      return nullptr;
    }
    default:
      return nullptr;
  }
}

}  // namespace bloblint
