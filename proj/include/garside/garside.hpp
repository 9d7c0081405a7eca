#pragma once

#include "garside/element.hpp"
#include "garside/core.hpp"
#include "garside/random.hpp"
#include "garside/braid.hpp"
#include "garside/cycling.hpp"
#include "garside/transport.hpp"
#include "garside/summit.hpp"
#include "garside/rigid.hpp"
#include "garside/generators.hpp"
#include "garside/bench.hpp"
