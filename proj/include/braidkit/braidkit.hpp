#pragma once

#include "braidkit/alexander.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/families.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/twisted_torus.hpp"
