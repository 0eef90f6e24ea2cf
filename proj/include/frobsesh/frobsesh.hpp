#pragma once

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/lattice.hpp"
#include "frobsesh/toric.hpp"
#include "frobsesh/seshadri.hpp"
#include "frobsesh/catalog.hpp"
#include "frobsesh/jetoracle.hpp"
#include "frobsesh/cartier.hpp"
#include "frobsesh/io.hpp"
#include "frobsesh/svg.hpp"
#include "frobsesh/scan.hpp"
