#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// JSON file from data/ compiled into the library.
struct EmbeddedFile {
  const char* path;  // relative to data/, e.g. "scenarios/surface1.json"
  const char* contents;
};

const std::vector<EmbeddedFile>& embedded_files();

/// Contents of an embedded file; throws Error("data", ...) if absent.
std::string_view embedded_file(std::string_view path);

}  // namespace pqs
