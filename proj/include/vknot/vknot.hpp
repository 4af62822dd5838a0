#pragma once

#include "vknot/affine.hpp"
#include "vknot/biquandle.hpp"
#include "vknot/checks.hpp"
#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
