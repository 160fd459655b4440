#pragma once

#include "unital/birkhoff.hpp"
#include "unital/channel.hpp"
#include "unital/covariant.hpp"
#include "unital/extremal.hpp"
#include "unital/geometry.hpp"
#include "unital/linalg.hpp"
#include "unital/optimize.hpp"
#include "unital/quaternion.hpp"
#include "unital/random.hpp"
#include "unital/unitary_opt.hpp"
#include "unital/witness.hpp"
