#pragma once

#include "symgb/rational.hpp"
#include "symgb/monomial.hpp"
#include "symgb/polynomial.hpp"
#include "symgb/text.hpp"
#include "symgb/groebner.hpp"
#include "symgb/symfunc.hpp"
#include "symgb/involution.hpp"
#include "symgb/hilbert.hpp"
