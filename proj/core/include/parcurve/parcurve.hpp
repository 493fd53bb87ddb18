#pragma once

#include "parcurve/angle.hpp"
#include "parcurve/arclength.hpp"
#include "parcurve/catalog.hpp"
#include "parcurve/crofton.hpp"
#include "parcurve/curve.hpp"
#include "parcurve/differential.hpp"
#include "parcurve/error.hpp"
#include "parcurve/offset.hpp"
#include "parcurve/polyline.hpp"
#include "parcurve/quadrature.hpp"
#include "parcurve/theorems.hpp"
#include "parcurve/vec2.hpp"
