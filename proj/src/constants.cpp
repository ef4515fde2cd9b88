#include "bloblint/constants.hpp"

#include <set>

namespace bloblint {

namespace {

// Any assignment to `name` (plain, this-qualified, or Class-qualified)
// anywhere in the project disqualifies the constant.
bool reassigned_somewhere(const Project& project, const std::string& name) {
  for (const auto& file : project.files) {
    bool hit = false;
    walk(*file->tree.root, [&](const Node& n) {
      if (hit) return;
      const auto* assign = as<Assign>(&n);
      if (!assign) return;
      if (const auto* id = as<Identifier>(assign->target)) {
        if (id->name == name) hit = true;
      } else if (const auto* fa = as<FieldAccess>(assign->target)) {
        if (fa->name == name) hit = true;
      }
    });
    if (hit) return true;
  }
  return false;
}

void collect_from_members(const Project& project, ConstantTable& table,
                          const std::string& class_name, const std::vector<Node*>& members,
                          bool implicit_final) {
  for (const Node* m : members) {
    const auto* f = as<FieldDecl>(m);
    if (!f) continue;
    bool is_final = (f->mods & kModFinal) != 0 || implicit_final;
    if (!is_final || !f->type || f->type->simple() != "String") continue;
    for (const VarDeclarator* v : f->vars) {
      const auto* lit = v->init ? as<StringLit>(v->init) : nullptr;
      if (!lit) continue;
      if (reassigned_somewhere(project, v->name)) continue;
      table.add(class_name, v->name, lit->value);
    }
  }
}

}  // namespace

ConstantTable resolve_constants(const Project& project) {
  ConstantTable table;
  for (const auto& file : project.files) {
    walk(*file->tree.root, [&](const Node& n) {
      if (const auto* cls = as<ClassDecl>(&n)) {
        collect_from_members(project, table, cls->name, cls->members, false);
      } else if (const auto* iface = as<InterfaceDecl>(&n)) {
        // interface fields are implicitly public static final
        collect_from_members(project, table, iface->name, iface->members, true);
      }
    });
  }
  return table;
}

}  // namespace bloblint
