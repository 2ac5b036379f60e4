#pragma once

#include "pixoct/closed_forms.hpp"
#include "pixoct/errors.hpp"
#include "pixoct/io.hpp"
#include "pixoct/lattice.hpp"
#include "pixoct/proximity.hpp"
#include "pixoct/rasterizer.hpp"
#include "pixoct/rational.hpp"
#include "pixoct/verify.hpp"
