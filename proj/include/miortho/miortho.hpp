#pragma once

#include "miortho/case_key.hpp"
#include "miortho/classical.hpp"
#include "miortho/equivalence.hpp"
#include "miortho/errors.hpp"
#include "miortho/matrix.hpp"
#include "miortho/numeric.hpp"
#include "miortho/parallel.hpp"
#include "miortho/parity.hpp"
#include "miortho/poly.hpp"
#include "miortho/quadrature.hpp"
#include "miortho/rational.hpp"
#include "miortho/routes.hpp"
#include "miortho/seed.hpp"
#include "miortho/sturm.hpp"
#include "miortho/system.hpp"
