#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "initrans/signature.h"
#include "initrans/translate.h"

namespace initrans {

struct BuiltinListing {
  std::vector<std::string> languages;
  std::vector<std::string> translations;
};

/// ULC, STLC, PCF, CPC or IPC. Throws std::out_of_range for other names.
const TypedSignature& get_language(std::string_view name);

/// pcf2ulc-turing, pcf2ulc-curry or cpc2ipc-godel-gentzen. Throws
/// std::out_of_range for other names.
const Translation& get_translation(std::string_view name);

/// Sorted names of all shipped languages and translations.
BuiltinListing list_builtins();

}  // namespace initrans
