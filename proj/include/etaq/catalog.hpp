#pragma once

// Named eta-quotient identities: each pairs a product expansion with an independent
// closed form or operator combination.

#include "etaq/pipeline.hpp"
#include "etaq/report.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace etaq {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::int64_t default_bound;
  /// Builds (lhs, rhs) able to reach `bound`.
  std::function<std::pair<IdentityPipeline, IdentityPipeline>(std::int64_t bound)> build;
};

const std::vector<CatalogEntry>& identity_catalog();

/// Throws std::invalid_argument for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

VerificationReport verify_catalog_identity(std::string_view name, std::int64_t bound);

}  // namespace etaq
