#include "bloblint/blobs.hpp"

#include <set>

namespace bloblint {

const char* blob_type_name(BlobType t) {
  switch (t) {
    case BlobType::MultiObjectMultiCommand: return "multi-object-multi-command";
    case BlobType::SingleObjectMultiCommand: return "single-object-multi-command";
    case BlobType::NotBlob: return "not-blob";
  }
  return "?";
}

BlobDiagnosis classify(const ListenerImpl& listener, const std::vector<Command>& commands,
                       const std::vector<Association>& associations, int threshold) {
  BlobDiagnosis diag;
  diag.listener = &listener;
  diag.cmd = static_cast<int>(commands.size());
  diag.threshold = threshold;
  diag.is_blob = diag.cmd >= threshold;
  if (!diag.is_blob) {
    diag.blob_type = BlobType::NotBlob;
    return diag;
  }
  std::set<const WidgetDecl*> distinct;
  for (const Association& a : associations)
    for (const WidgetDecl* w : a.decls()) distinct.insert(w);
  diag.blob_type = distinct.size() >= 2 ? BlobType::MultiObjectMultiCommand
                                        : BlobType::SingleObjectMultiCommand;
  return diag;
}

}  // namespace bloblint
