#pragma once

#include <vector>

#include "fibmod5/catalog_model.hpp"

namespace fibmod5::detail {

/// Builds the registry in definition order; identity_catalog.cpp sorts it.
std::vector<IdentityFamily> build_families();

}  // namespace fibmod5::detail
