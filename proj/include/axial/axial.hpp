#pragma once

#include "axial/rational.hpp"
#include "axial/linalg.hpp"
#include "axial/isometry.hpp"
#include "axial/roots.hpp"
#include "axial/coxeter.hpp"
#include "axial/interval.hpp"
#include "axial/rectangle.hpp"
#include "axial/verdict.hpp"
#include "axial/serialize.hpp"
