#ifndef RECZEROS_RECZEROS_HPP
#define RECZEROS_RECZEROS_HPP

#include "reczeros/rational.hpp"
#include "reczeros/interval.hpp"
#include "reczeros/exactnum.hpp"
#include "reczeros/ratpoly.hpp"
#include "reczeros/sturm.hpp"
#include "reczeros/reciprocal.hpp"
#include "reczeros/family.hpp"
#include "reczeros/certify.hpp"
#include "reczeros/runner.hpp"
#include "reczeros/paperchecks.hpp"
#include "reczeros/analysis.hpp"
#include "reczeros/ranges.hpp"
#include "reczeros/serialize.hpp"

#endif // RECZEROS_RECZEROS_HPP
