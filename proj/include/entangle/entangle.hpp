#pragma once

#include "entangle/batch.hpp"
#include "entangle/bell.hpp"
#include "entangle/criteria.hpp"
#include "entangle/densecoding.hpp"
#include "entangle/linalg.hpp"
#include "entangle/states.hpp"
#include "entangle/witness.hpp"

namespace entangle {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace entangle
