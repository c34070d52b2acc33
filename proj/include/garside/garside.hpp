#pragma once

// Umbrella header.

#include "garside/simple_element.hpp"
#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/roots.hpp"
#include "garside/lab.hpp"
