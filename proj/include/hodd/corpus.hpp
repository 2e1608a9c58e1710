#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hodd/function_spec.hpp"

namespace hodd {

struct CorpusEntry {
  std::string name;
  FunctionSpec spec;
  std::string provenance;
};

// All compiled-in entries, in listing order.
const std::vector<CorpusEntry>& corpus();

// Throws DomainError listing the available names when the name is unknown.
const CorpusEntry& corpus_lookup(std::string_view name);

// One "name<TAB>dim<TAB>provenance" line per entry.
std::string corpus_listing();

}  // namespace hodd
