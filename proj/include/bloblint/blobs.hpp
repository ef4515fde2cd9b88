#pragma once

#include <vector>

#include "bloblint/associate.hpp"

namespace bloblint {

enum class BlobType { MultiObjectMultiCommand, SingleObjectMultiCommand, NotBlob };

const char* blob_type_name(BlobType t);

struct BlobDiagnosis {
  const ListenerImpl* listener = nullptr;
  int cmd = 0;  // command count
  bool is_blob = false;
  BlobType blob_type = BlobType::NotBlob;
  int threshold = 3;
};

// Pure classification: is_blob iff cmd >= threshold; type 1 when the
// commands are attributable to at least two distinct interactive objects,
// type 2 otherwise (single widget or pure event-attribute dispatch).
BlobDiagnosis classify(const ListenerImpl& listener, const std::vector<Command>& commands,
                       const std::vector<Association>& associations, int threshold);

}  // namespace bloblint
