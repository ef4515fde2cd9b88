#include <fstream>
#include <sstream>

#include "bloblint/blobs.hpp"
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

struct Run {
  Project project;
  Catalog catalog = builtin_catalog();
  ConstantTable constants;
  std::vector<ListenerImpl> listeners;
  std::vector<WidgetDecl> widgets;

  explicit Run(const std::vector<std::string>& rels) {
    std::vector<std::pair<std::string, std::string>> sources;
    for (const auto& rel : rels) sources.emplace_back(rel, fixture(rel));
    project = Project::from_sources(sources);
    constants = resolve_constants(project);
    listeners = find_ui_listeners(project, catalog);
    widgets = find_all_interactive_objects({project, catalog, constants});
  }

  AnalysisContext ctx() const { return {project, catalog, constants}; }

  BlobDiagnosis diagnose(const std::string& id, int threshold) {
    for (const auto& l : listeners) {
      if (l.id != id) continue;
      auto cmds = detect_commands(ctx(), l);
      std::vector<Association> assocs;
      for (const auto& c : cmds) assocs.push_back(associate(ctx(), c, widgets));
      return classify(l, cmds, assocs, threshold);
    }
    REQUIRE(false);
    return {};
  }
};

}  // namespace

TEST_CASE("widget discovery on listing 6") {
  Run r({"listings/listing5.java", "listings/listing6.java"});
  REQUIRE(r.widgets.size() == 2);
  const WidgetDecl* menu_item = nullptr;
  const WidgetDecl* button = nullptr;
  for (const auto& w : r.widgets) {
    if (w.name() == "menuItem") menu_item = &w;
    if (w.name() == "button") button = &w;
  }
  REQUIRE(menu_item != nullptr);
  REQUIRE(button != nullptr);
  CHECK(menu_item->identity_properties.count("Copy") == 1);
  CHECK(button->identity_properties.count("Cut") == 1);
  CHECK(menu_item->registrations.size() == 1);
  CHECK(button->registrations.size() == 1);
  CHECK(menu_item->init_method != nullptr);
  CHECK(menu_item->usages.size() == 3);  // new, setActionCommand, addActionListener
}

TEST_CASE("widget property resolved through a constant") {
  Run r({"listings/shared_cmd.java"});
  REQUIRE(r.widgets.size() == 2);
  for (const auto& w : r.widgets) CHECK(w.identity_properties.count("actionCmd") == 1);
}

TEST_CASE("file with no widgets yields none") {
  Run r({"listings/listing2.java"});
  CHECK(r.widgets.empty());
}

TEST_CASE("association by property match: listing 5 Copy -> menuItem") {
  Run r({"listings/listing5.java", "listings/listing6.java"});
  for (const auto& l : r.listeners) {
    if (l.id != "MenuListener#ActionListener") continue;
    auto cmds = detect_commands(r.ctx(), l);
    REQUIRE(cmds.size() == 3);
    auto copy = associate(r.ctx(), cmds[0], r.widgets);
    REQUIRE(copy.widgets.size() == 1);
    CHECK(copy.widgets[0].widget->name() == "menuItem");
    CHECK(copy.widgets[0].technique == AssociationTechnique::PropertyMatch);
    auto cut = associate(r.ctx(), cmds[1], r.widgets);
    REQUIRE(cut.widgets.size() == 1);
    CHECK(cut.widgets[0].widget->name() == "button");
    // no widget carries the "Paste" action command
    CHECK(associate(r.ctx(), cmds[2], r.widgets).empty());
  }
}

TEST_CASE("association by reference: listing 8 first command -> view.moveDown") {
  Run r({"listings/listing8.java"});
  for (const auto& l : r.listeners) {
    auto cmds = detect_commands(r.ctx(), l);
    REQUIRE(cmds.size() == 6);
    auto assoc = associate(r.ctx(), cmds[0], r.widgets);
    REQUIRE(assoc.widgets.size() == 1);
    CHECK(assoc.widgets[0].widget->name() == "moveDown");
    CHECK(assoc.widgets[0].technique == AssociationTechnique::ReferenceComparison);
  }
}

TEST_CASE("type-only association flags ambiguity with two registered buttons") {
  Run r({"refactor/two_buttons.java"});
  for (const auto& l : r.listeners) {
    auto cmds = detect_commands(r.ctx(), l);
    REQUIRE(cmds.size() == 2);
    auto assoc = associate(r.ctx(), cmds[0], r.widgets);
    CHECK(assoc.widgets.size() == 2);
    CHECK(assoc.ambiguous());
    for (const auto& w : assoc.widgets) CHECK(w.technique == AssociationTechnique::TypeOnly);
  }
}

TEST_CASE("registration-site association for anonymous and lambda listeners") {
  Run r({"refactor/anon_reg.java"});
  REQUIRE(r.listeners.size() == 2);
  for (const auto& l : r.listeners) {
    auto cmds = detect_commands(r.ctx(), l);
    REQUIRE(cmds.size() == 1);
    auto assoc = associate(r.ctx(), cmds[0], r.widgets);
    REQUIRE(assoc.widgets.size() == 1);
    CHECK(assoc.widgets[0].technique == AssociationTechnique::RegistrationSite);
  }
}

TEST_CASE("shared constant: one command associated with two widgets") {
  Run r({"listings/shared_cmd.java"});
  for (const auto& l : r.listeners) {
    auto cmds = detect_commands(r.ctx(), l);
    REQUIRE(cmds.size() == 1);
    auto assoc = associate(r.ctx(), cmds[0], r.widgets);
    CHECK(assoc.widgets.size() == 2);
  }
}

TEST_CASE("classify: listing 1 is a multi-object blob at threshold 3") {
  Run r({"listings/listing1.java"});
  BlobDiagnosis diag = r.diagnose("AController#ActionListener", 3);
  CHECK(diag.cmd == 3);
  CHECK(diag.is_blob);
  CHECK(diag.blob_type == BlobType::MultiObjectMultiCommand);
}

TEST_CASE("classify: two commands are not a blob at threshold 3") {
  Run r({"listings/fig4_left.java"});
  BlobDiagnosis diag = r.diagnose("DrawingController#ActionListener", 3);
  CHECK(diag.cmd == 2);
  CHECK_FALSE(diag.is_blob);
  CHECK(diag.blob_type == BlobType::NotBlob);
  // and it is a type-1 blob at threshold 2
  BlobDiagnosis at2 = r.diagnose("DrawingController#ActionListener", 2);
  CHECK(at2.is_blob);
  CHECK(at2.blob_type == BlobType::MultiObjectMultiCommand);
}

TEST_CASE("classify: key listener switch is single-object at threshold 2") {
  Run r({"listings/key_listener.java"});
  BlobDiagnosis diag = r.diagnose("GroupsPaneKeyListener#KeyListener", 2);
  CHECK(diag.cmd == 2);
  CHECK(diag.is_blob);
  CHECK(diag.blob_type == BlobType::SingleObjectMultiCommand);
}

TEST_CASE("classify: mouse listener is single-object at threshold 3") {
  Run r({"listings/mouse_listener.java"});
  BlobDiagnosis diag = r.diagnose("CanvasMouseListener#MouseListener", 3);
  CHECK(diag.cmd == 3);
  CHECK(diag.is_blob);
  CHECK(diag.blob_type == BlobType::SingleObjectMultiCommand);
}

TEST_CASE("monotonicity: raising the threshold never flags more listeners") {
  Run r({"listings/listing1.java", "listings/listing5.java", "listings/listing6.java",
         "listings/key_listener.java", "listings/mouse_listener.java",
         "listings/fig4_left.java"});
  for (const auto& l : r.listeners) {
    bool prev = true;
    for (int t = 2; t <= 8; ++t) {
      BlobDiagnosis diag = r.diagnose(l.id, t);
      if (!prev) CHECK_FALSE(diag.is_blob);
      prev = diag.is_blob;
    }
  }
}
