#include <fstream>
#include <set>
#include <sstream>

#include "bloblint/listeners.hpp"
#include "doctest.h"

using namespace bloblint;

namespace {

std::string fixture(const std::string& rel) {
  std::string path = std::string(BLOBLINT_TEST_DIR) + "/fixtures/" + rel;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("listing 1: one class listener with one handler") {
  auto project = Project::from_sources({{"listing1.java", fixture("listings/listing1.java")}});
  Catalog catalog = builtin_catalog();
  auto listeners = find_ui_listeners(project, catalog);
  REQUIRE(listeners.size() == 1);
  CHECK(listeners[0].kind == ListenerKind::Class);
  CHECK(listeners[0].spec->simple_name() == "ActionListener");
  CHECK(listeners[0].handlers.size() == 1);
  CHECK(listeners[0].handlers[0].event_param == "e");
}

TEST_CASE("listing 2: two anonymous listeners, one registration site each") {
  auto project = Project::from_sources({{"listing2.java", fixture("listings/listing2.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 2);
  for (const auto& l : listeners) {
    CHECK(l.kind == ListenerKind::Anonymous);
    CHECK(l.registrations.size() == 1);
    CHECK(l.registrations[0].widget_expr != nullptr);
  }
}

TEST_CASE("listing 4: two lambda listeners") {
  auto project = Project::from_sources({{"listing4.java", fixture("listings/listing4.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 2);
  for (const auto& l : listeners) {
    CHECK(l.kind == ListenerKind::Lambda);
    CHECK(l.spec->simple_name() == "ActionListener");
    CHECK(l.registrations.size() == 1);
    CHECK(l.handlers.size() == 1);
  }
}

TEST_CASE("listing 5: one impl per implemented listener interface") {
  auto project = Project::from_sources({{"listing5.java", fixture("listings/listing5.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 2);
  std::set<std::string> ids;
  for (const auto& l : listeners) ids.insert(l.id);
  CHECK(ids.count("MenuListener#ActionListener") == 1);
  CHECK(ids.count("MenuListener#CaretListener") == 1);
}

TEST_CASE("listing 3: empty handler bodies are dropped") {
  auto project = Project::from_sources({{"listing3.java", fixture("listings/listing3.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 1);
  CHECK(listeners[0].spec->toolkit == "swing");
  CHECK(listeners[0].handlers.size() == 3);  // 5 declared, 2 empty
}

TEST_CASE("registrations resolve across files via typed variable") {
  auto project = Project::from_sources(
      {{"listing5.java", fixture("listings/listing5.java")},
       {"listing6.java", fixture("listings/listing6.java")}});
  Catalog catalog = builtin_catalog();
  auto listeners = find_ui_listeners(project, catalog);
  const ListenerImpl* action = nullptr;
  for (const auto& l : listeners)
    if (l.id == "MenuListener#ActionListener") action = &l;
  REQUIRE(action != nullptr);
  REQUIRE(action->registrations.size() == 2);
  std::set<std::string> receivers;
  for (const auto& site : action->registrations) {
    REQUIRE(site.widget_expr != nullptr);
    receivers.insert(as<Identifier>(site.widget_expr)->name);
  }
  CHECK(receivers == std::set<std::string>{"menuItem", "button"});
}

TEST_CASE("self-registration via this counts as one site") {
  auto project = Project::from_sources({{"fig4.java", fixture("listings/fig4_left.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 1);
  CHECK(listeners[0].registrations.size() == 2);  // but1 and but2, both via this
}

TEST_CASE("unregistered listener class has no sites") {
  auto project = Project::from_sources({{"listing1.java", fixture("listings/listing1.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 1);
  CHECK(listeners[0].registrations.empty());
}

TEST_CASE("adapter subclasses are listeners via the catalog mapping") {
  auto project = Project::from_sources({{"a.java",
                                         "class DragTracker extends MouseAdapter {\n"
                                         "  public void mousePressed(MouseEvent e) {\n"
                                         "    startDrag(e);\n"
                                         "  }\n"
                                         "}\n"}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 1);
  CHECK(listeners[0].spec->simple_name() == "MouseListener");
  CHECK(listeners[0].handlers.size() == 1);
}

TEST_CASE("superclass listener interface is inherited within the project") {
  auto project = Project::from_sources(
      {{"p0.java",
        "public class Panel0 implements ActionListener {\n"
        "  public void actionPerformed(ActionEvent ae) {\n"
        "    if (ae.getActionCommand().equals(\"OK\")) { ok(); }\n"
        "  }\n"
        "}\n"},
       {"p1.java",
        "public class Panel1 extends Panel0 {\n"
        "  public void actionPerformed(ActionEvent ae) {\n"
        "    if (ae.getActionCommand().equals(\"OK\")) { ok(); return; }\n"
        "    super.actionPerformed(ae);\n"
        "  }\n"
        "}\n"}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  REQUIRE(listeners.size() == 2);  // both handlers analyzed independently
}

TEST_CASE("no handler method is claimed by two listener impls") {
  auto project = Project::from_sources(
      {{"listing5.java", fixture("listings/listing5.java")},
       {"listing3.java", fixture("listings/listing3.java")},
       {"listing2.java", fixture("listings/listing2.java")}});
  auto listeners = find_ui_listeners(project, builtin_catalog());
  std::set<const void*> claimed;
  for (const auto& l : listeners) {
    for (const auto& h : l.handlers) {
      const void* node = h.method ? static_cast<const void*>(h.method)
                                  : static_cast<const void*>(h.lambda);
      CHECK(claimed.insert(node).second);
    }
  }
}
