#include <fstream>
#include <sstream>
#include <vector>

#include "bloblint/constants.hpp"
#include "bloblint/edits.hpp"
#include "bloblint/errors.hpp"
#include "bloblint/parser.hpp"
#include "bloblint/project.hpp"
#include "doctest.h"

using namespace bloblint;

namespace {

std::string read_fixture(const std::string& rel) {
  std::string path = std::string(BLOBLINT_TEST_DIR) + "/fixtures/" + rel;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Span containment and sibling non-overlap, checked over the whole tree.
void check_span_invariants(const Node& root, std::size_t text_size) {
  walk(root, [&](const Node& n) {
    CHECK(n.span.begin <= n.span.end);
    CHECK(n.span.end <= text_size);
    std::vector<Span> child_spans;
    for_each_child(n, [&](const Node& c) {
      CHECK(n.span.contains(c.span));
      child_spans.push_back(c.span);
    });
    for (std::size_t i = 0; i + 1 < child_spans.size(); ++i)
      for (std::size_t j = i + 1; j < child_spans.size(); ++j)
        CHECK_FALSE(child_spans[i].overlaps(child_spans[j]));
  });
}

}  // namespace

TEST_CASE("apply_edits identity") {
  std::string text = "class A {\n  int x;\n}\n";
  CHECK(apply_edits(text, {}) == text);
}

TEST_CASE("apply_edits delete and replace") {
  std::string text = "keep1 drop keep2";
  CHECK(apply_edits(text, {{{6, 11}, ""}}) == "keep1 keep2");
  CHECK(apply_edits(text, {{{6, 10}, "swap"}}) == "keep1 swap keep2");
}

TEST_CASE("apply_edits order independent for adjacent edits") {
  std::string text = "abcdef";
  std::vector<TextEdit> fwd = {{{1, 2}, "X"}, {{2, 4}, "Y"}};
  std::vector<TextEdit> rev = {{{2, 4}, "Y"}, {{1, 2}, "X"}};
  // reference: apply one at a time from the rightmost span
  std::string expected = apply_edits(apply_edits(text, {{{2, 4}, "Y"}}), {{{1, 2}, "X"}});
  CHECK(apply_edits(text, fwd) == expected);
  CHECK(apply_edits(text, rev) == expected);
}

TEST_CASE("apply_edits rejects overlap") {
  std::string text = "abcdef";
  CHECK_THROWS_AS(apply_edits(text, {{{1, 4}, "X"}, {{3, 5}, "Y"}}), OverlapError);
}

TEST_CASE("parse minimal class") {
  SyntaxTree tree = parse("class A {}");
  REQUIRE(tree.root != nullptr);
  REQUIRE(tree.root->types.size() == 1);
  const auto* cls = as<ClassDecl>(tree.root->types[0]);
  REQUIRE(cls != nullptr);
  CHECK(cls->name == "A");
  CHECK(cls->members.empty());
}

TEST_CASE("parse listing 1 structure") {
  std::string text = read_fixture("listings/listing1.java");
  SyntaxTree tree = parse(text);
  REQUIRE(tree.root->types.size() == 1);
  const auto* cls = as<ClassDecl>(tree.root->types[0]);
  REQUIRE(cls != nullptr);
  CHECK(cls->name == "AController");
  REQUIRE(cls->implements.size() == 1);
  CHECK(cls->implements[0]->name == "ActionListener");
  int fields = 0, methods = 0;
  const MethodDecl* handler = nullptr;
  for (const Node* m : cls->members) {
    if (is<FieldDecl>(m)) ++fields;
    if (const auto* md = as<MethodDecl>(m)) {
      ++methods;
      handler = md;
    }
  }
  CHECK(fields == 3);
  CHECK(methods == 1);
  REQUIRE(handler != nullptr);
  CHECK(handler->name == "actionPerformed");
  REQUIRE(handler->params.size() == 1);
  CHECK(handler->params[0]->type->name == "ActionEvent");
  CHECK(handler->params[0]->name == "e");
  check_span_invariants(*tree.root, text.size());
}

TEST_CASE("unsupported statements become opaque nodes") {
  std::string text =
      "class A {\n"
      "  void run() {\n"
      "    outer: for (int i = 0; i < 3; i = i + 1) {\n"
      "      doWork(i);\n"
      "      break outer;\n"
      "    }\n"
      "  }\n"
      "}\n";
  SyntaxTree tree = parse(text);
  const auto* cls = as<ClassDecl>(tree.root->types[0]);
  const auto* method = as<MethodDecl>(cls->members[0]);
  REQUIRE(method->body != nullptr);
  REQUIRE(method->body->stmts.size() == 1);
  const auto* opaque = as<Opaque>(method->body->stmts[0]);
  REQUIRE(opaque != nullptr);
  CHECK(opaque->mentions("outer"));
  CHECK(opaque->mentions("doWork"));
  check_span_invariants(*tree.root, text.size());
}

TEST_CASE("unbalanced braces raise ParseError with position") {
  try {
    parse("class A { void f() { }\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 9);
  }
}

TEST_CASE("span invariants hold across all listing fixtures") {
  const char* names[] = {
      "listings/listing1.java",  "listings/listing2.java", "listings/listing3.java",
      "listings/listing4.java",  "listings/listing5.java", "listings/listing6.java",
      "listings/listing7.java",  "listings/listing8.java", "listings/key_listener.java",
      "listings/mouse_listener.java", "listings/fig4_left.java",
      "listings/shared_cmd.java", "listings/attr_copy.java"};
  for (const char* name : names) {
    CAPTURE(name);
    std::string text = read_fixture(name);
    SyntaxTree tree = parse(text);
    check_span_invariants(*tree.root, text.size());
  }
}

TEST_CASE("parse if else chain nests in else branch") {
  std::string text =
      "class A { void f(int x) {"
      " if (x == 1) { a(); } else if (x == 2) { b(); } else { c(); }"
      "} }";
  SyntaxTree tree = parse(text);
  const auto* cls = as<ClassDecl>(tree.root->types[0]);
  const auto* method = as<MethodDecl>(cls->members[0]);
  const auto* outer = as<IfStmt>(method->body->stmts[0]);
  REQUIRE(outer != nullptr);
  const auto* inner = as<IfStmt>(outer->else_stmt);
  REQUIRE(inner != nullptr);
  CHECK(inner->else_stmt != nullptr);
  CHECK(is<Block>(inner->else_stmt));
}

TEST_CASE("parse lambda and anonymous registration forms") {
  std::string text = read_fixture("listings/listing4.java");
  SyntaxTree tree = parse(text);
  int lambdas = 0;
  walk(*tree.root, [&](const Node& n) {
    if (is<Lambda>(&n)) ++lambdas;
  });
  CHECK(lambdas == 2);

  text = read_fixture("listings/listing2.java");
  SyntaxTree tree2 = parse(text);
  int anons = 0;
  walk(*tree2.root, [&](const Node& n) {
    if (const auto* nw = as<New>(&n); nw && nw->is_anon) ++anons;
  });
  CHECK(anons == 2);
}

TEST_CASE("parse switch cases") {
  std::string text = read_fixture("listings/key_listener.java");
  SyntaxTree tree = parse(text);
  const SwitchStmt* sw = nullptr;
  walk(*tree.root, [&](const Node& n) {
    if (const auto* s = as<SwitchStmt>(&n)) sw = s;
  });
  REQUIRE(sw != nullptr);
  CHECK(sw->cases.size() == 2);
  CHECK(sw->cases[0]->stmts.size() == 2);  // call + break
}

TEST_CASE("resolve_constants picks up final string literals") {
  auto project = Project::from_sources({{"attr_copy.java", read_fixture("listings/attr_copy.java")}});
  ConstantTable table = resolve_constants(project);
  auto v = table.lookup("ChooserController", "ACTION_CMD");
  REQUIRE(v.has_value());
  CHECK(*v == "actionCmd");
  // qualified access from another class
  auto v2 = table.lookup("ChooserPanel", "ACTION_CMD");
  REQUIRE(v2.has_value());
  CHECK(*v2 == "actionCmd");
}

TEST_CASE("resolve_constants skips reassigned and non-literal fields") {
  auto project = Project::from_sources({{"a.java",
                                         "class A {\n"
                                         "  final String GOOD = \"g\";\n"
                                         "  final String REASSIGNED = \"r\";\n"
                                         "  String notFinal = \"n\";\n"
                                         "  final String computed = other();\n"
                                         "  void f() { REASSIGNED = \"x\"; }\n"
                                         "}\n"}});
  ConstantTable table = resolve_constants(project);
  CHECK(table.lookup("A", "GOOD").has_value());
  CHECK_FALSE(table.lookup("A", "REASSIGNED").has_value());
  CHECK_FALSE(table.lookup("A", "notFinal").has_value());
  CHECK_FALSE(table.lookup("A", "computed").has_value());
}

TEST_CASE("resolve_constants on empty project") {
  auto project = Project::from_sources({});
  CHECK(resolve_constants(project).size() == 0);
}

TEST_CASE("declared types resolve through fields, locals, and project methods") {
  auto project = Project::from_sources(
      {{"l8.java", read_fixture("listings/listing8.java")},
       {"l2.java", read_fixture("listings/listing2.java")}});
  // find the expression `view.moveDown` in listing 8
  const Node* move_down = nullptr;
  walk(*project.files[0]->tree.root, [&](const Node& n) {
    if (const auto* fa = as<FieldAccess>(&n); fa && fa->name == "moveDown" && !move_down)
      move_down = fa;
  });
  REQUIRE(move_down != nullptr);
  const TypeRef* t = declared_type(project, *move_down);
  REQUIRE(t != nullptr);
  CHECK(t->simple() == "JButton");
  VarRef ref = resolve_var(project, *move_down);
  REQUIRE(ref.var != nullptr);
  CHECK(ref.is_field);
  REQUIRE(ref.owner != nullptr);
  CHECK(ref.owner->name == "MapView");
}
