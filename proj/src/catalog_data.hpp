// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace aoa::detail {

struct CatalogRecord {
  std::uint32_t n;
  const char* json;
};

// Generated at configure time from data/catalog/dm*.json.
extern const CatalogRecord kCatalog[];
extern const std::size_t kCatalogSize;

}  // namespace aoa::detail
