#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bloblint/blobs.hpp"
#include "bloblint/edits.hpp"

namespace bloblint {

enum class RefactorStyle { Lambda, AnonymousClass };

enum class UnrefactorableReason {
  SingleObjectMultiCommand,
  NoWidgetFound,
  AmbiguousAssociation,
  ManualAttributeCopy,
};

const char* reason_name(UnrefactorableReason r);

// One atomic listener to be created: a command inlined at the registration
// of its widget(s). Two or more widgets mean a shared constant listener.
struct ListenerInsertion {
  const Command* command = nullptr;
  std::vector<const WidgetDecl*> widgets;
  std::vector<std::pair<const WidgetDecl*, const MethodCall*>> sites;
  bool shared = false;
  std::string constant_name;  // shared constant field name
  RefactorStyle style = RefactorStyle::Lambda;
};

// A blob-class field the commands depend on, scheduled to be copied into the
// class that owns the widgets.
struct AttributeCopy {
  const FieldDecl* field = nullptr;
  std::vector<const Node*> init_statements;
  const ClassDecl* target = nullptr;
};

struct RefactorPlan {
  BlobDiagnosis blob;
  std::vector<ListenerInsertion> insertions;
  std::vector<const MethodDecl*> removed_handlers;
  const TypeRef* implements_entry = nullptr;  // entry to drop from the clause
  bool remove_whole_implements = false;
  std::vector<const Node*> dead_setter_stmts;
  std::vector<AttributeCopy> attribute_copies;
  bool needs_confirmation = false;  // true when attribute copies are scheduled
  std::vector<std::string> notes;
};

struct Unrefactorable {
  UnrefactorableReason reason;
  std::string diagnostic;  // human-readable, with source positions
};

// Refactored -> plan set, failure empty. Unrefactorable -> failure set; for
// ManualAttributeCopy the plan is still present and can be applied once
// explicitly confirmed.
struct RefactorOutcome {
  std::optional<RefactorPlan> plan;
  std::optional<Unrefactorable> failure;

  bool refactorable() const { return plan.has_value() && !failure.has_value(); }
  bool needs_confirmation() const {
    return plan.has_value() && failure.has_value() &&
           failure->reason == UnrefactorableReason::ManualAttributeCopy;
  }
};

RefactorOutcome plan_refactoring(const AnalysisContext& ctx, const BlobDiagnosis& blob,
                                 const std::vector<Command>& commands,
                                 const std::vector<Association>& associations,
                                 const std::vector<WidgetDecl>& widgets, RefactorStyle style);

struct FileEdits {
  const SourceFile* file = nullptr;
  std::vector<TextEdit> edits;  // ordered right-to-left by span
};

// Turns a plan into concrete text edits; the result re-parses cleanly.
std::vector<FileEdits> emit_edits(const AnalysisContext& ctx, const RefactorPlan& plan);

}  // namespace bloblint
