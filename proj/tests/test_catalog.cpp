#include <cstdio>
#include <fstream>

#include "bloblint/catalog.hpp"
#include "doctest.h"

using namespace bloblint;

TEST_CASE("builtin catalog has ActionListener with actionPerformed") {
  Catalog catalog = builtin_catalog();
  const ListenerSpec* spec = catalog.listener_by_name("ActionListener");
  REQUIRE(spec != nullptr);
  CHECK(spec->qualified_name == "java.awt.event.ActionListener");
  REQUIRE(spec->methods.size() == 1);
  CHECK(spec->methods[0].name == "actionPerformed");
  CHECK(spec->methods[0].event_type == "ActionEvent");
}

TEST_CASE("Swing MouseListener exposes five handler methods") {
  Catalog catalog = builtin_catalog();
  const ListenerSpec* spec = catalog.listener_by_name("MouseListener");
  REQUIRE(spec != nullptr);
  CHECK(spec->toolkit == "swing");
  CHECK(spec->methods.size() == 5);
}

TEST_CASE("non-listeners are rejected") {
  Catalog catalog = builtin_catalog();
  CHECK(catalog.listener_by_name("Runnable") == nullptr);
  CHECK(catalog.listener_by_name("String") == nullptr);
}

TEST_CASE("every handler method has exactly one event parameter type") {
  Catalog catalog = builtin_catalog();
  for (const auto& l : catalog.listeners()) {
    CHECK_FALSE(l.methods.empty());
    for (const auto& m : l.methods) {
      CHECK_FALSE(m.name.empty());
      CHECK_FALSE(m.event_type.empty());
    }
  }
}

TEST_CASE("each registration method maps to one listener per widget") {
  Catalog catalog = builtin_catalog();
  for (const auto& w : catalog.widgets()) {
    std::map<std::string, const ListenerSpec*> seen;
    for (const auto& r : w.registrations) {
      auto [it, inserted] = seen.emplace(r.method, r.listener);
      if (!inserted) CHECK(it->second == r.listener);
    }
  }
}

TEST_CASE("empty extension file keeps builtins only") {
  std::string path = std::string(BLOBLINT_TEST_DIR) + "/fixtures/empty.cat";
  { std::ofstream out(path); }
  Catalog catalog = load_catalog(path);
  CHECK(catalog.listeners().size() == builtin_catalog().listeners().size());
  std::remove(path.c_str());
}

TEST_CASE("GWT extension entries become visible") {
  Catalog catalog = builtin_catalog();
  catalog.merge(
      "listener gwt com.google.gwt.event.dom.client.ClickHandler onClick:ClickEvent\n"
      "widget gwt com.google.gwt.user.client.ui.Button\n"
      "register com.google.gwt.user.client.ui.Button addClickHandler ClickHandler\n",
      "<test>");
  const ListenerSpec* click = catalog.listener_by_name("ClickHandler");
  REQUIRE(click != nullptr);
  CHECK(click->toolkit == "gwt");
  CHECK(catalog.is_registration_method("addClickHandler"));
}

TEST_CASE("duplicate and malformed entries raise CatalogError") {
  Catalog catalog = builtin_catalog();
  CHECK_THROWS_AS(
      catalog.merge("listener swing java.awt.event.ActionListener actionPerformed:ActionEvent\n",
                    "<test>"),
      CatalogError);
  CHECK_THROWS_AS(catalog.merge("listener swing Broken\n", "<test>"), CatalogError);
  CHECK_THROWS_AS(catalog.merge("frobnicate a b c\n", "<test>"), CatalogError);
  CHECK_THROWS_AS(catalog.merge("register NoSuchWidget addFooListener ActionListener\n", "<test>"),
                  CatalogError);
}

TEST_CASE("identity getters include getSource") {
  Catalog catalog = builtin_catalog();
  CHECK(catalog.is_identity_getter("getSource"));
  CHECK(catalog.is_identity_getter("getActionCommand"));
  CHECK(catalog.is_identity_setter("setActionCommand"));
  CHECK_FALSE(catalog.is_identity_getter("getKeyCode"));
  CHECK_FALSE(catalog.is_identity_getter("getClickCount"));
}
