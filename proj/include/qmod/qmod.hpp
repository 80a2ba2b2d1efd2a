#pragma once

#include "qmod/errors.hpp"
#include "qmod/poly.hpp"
#include "qmod/rational_function.hpp"
#include "qmod/q_analogs.hpp"
#include "qmod/laurent.hpp"
#include "qmod/quiver.hpp"
#include "qmod/framing.hpp"
#include "qmod/local_quiver.hpp"
#include "qmod/counting.hpp"
#include "qmod/decompositions.hpp"
#include "qmod/twisted_series.hpp"
#include "qmod/betti.hpp"
#include "qmod/hilbert.hpp"
#include "qmod/cells.hpp"
#include "qmod/io.hpp"
#include "qmod/validation.hpp"
