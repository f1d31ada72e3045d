#pragma once

/// @file fring.hpp
/// @brief Umbrella header for the library core (everything except the JSON
/// report renderer, which needs the vendored json header).

#include "abgroup.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "corpus.hpp"
#include "group.hpp"
#include "harness.hpp"
#include "hom.hpp"
#include "homological.hpp"
#include "module.hpp"
#include "properties.hpp"
#include "ring.hpp"
#include "ring_theory.hpp"
#include "text_format.hpp"
