#ifndef NEXFUZ_NEXFUZ_HPP
#define NEXFUZ_NEXFUZ_HPP

#include "nexfuz/errors.hpp"
#include "nexfuz/formula.hpp"
#include "nexfuz/interval.hpp"
#include "nexfuz/logics.hpp"
#include "nexfuz/lp.hpp"
#include "nexfuz/metric_space.hpp"
#include "nexfuz/model.hpp"
#include "nexfuz/onestep.hpp"
#include "nexfuz/parser.hpp"
#include "nexfuz/prop_tableau.hpp"
#include "nexfuz/rational.hpp"
#include "nexfuz/sequent.hpp"
#include "nexfuz/solver.hpp"

#endif  // NEXFUZ_NEXFUZ_HPP
