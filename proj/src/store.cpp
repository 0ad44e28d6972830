#include "hsk/store.hpp"

namespace hsk {

std::string_view to_string(StoreBackend b) {
  switch (b) {
    case StoreBackend::array: return "array";
    case StoreBackend::hash: return "hash";
    case StoreBackend::tree: return "tree";
  }
  return "array";
}

StoreBackend parse_store_backend(std::string_view name) {
  if (name == "array") return StoreBackend::array;
  if (name == "hash") return StoreBackend::hash;
  if (name == "tree") return StoreBackend::tree;
  throw std::invalid_argument("unknown store backend '" + std::string(name) +
                              "', expected array, hash or tree");
}

}  // namespace hsk
