#pragma once

// Umbrella header: the whole library in dependency order.

#include "flowerkit/errors.hpp"
#include "flowerkit/rational.hpp"
#include "flowerkit/vertex_set.hpp"
#include "flowerkit/set_family.hpp"
#include "flowerkit/canonical.hpp"
#include "flowerkit/diversity.hpp"
#include "flowerkit/constructions.hpp"
#include "flowerkit/flower.hpp"
#include "flowerkit/search.hpp"
#include "flowerkit/ratlp.hpp"
#include "flowerkit/io.hpp"
#include "flowerkit/cli.hpp"
