#include "pqs/builtin_data.hpp"

#include "pqs/error.hpp"

namespace pqs {

std::string_view embedded_file(std::string_view path) {
  for (const auto& f : embedded_files())
    if (path == f.path) return f.contents;
  throw Error("data", "no embedded file '" + std::string(path) + "'");
}

}  // namespace pqs
