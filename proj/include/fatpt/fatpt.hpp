#pragma once

#include "fatpt/rational.hpp"
#include "fatpt/monomial.hpp"
#include "fatpt/polynomial.hpp"
#include "fatpt/parse.hpp"
#include "fatpt/linalg.hpp"
#include "fatpt/groebner.hpp"
#include "fatpt/module.hpp"
#include "fatpt/ideal.hpp"
#include "fatpt/hilbert.hpp"
#include "fatpt/scheme.hpp"
#include "fatpt/kaehler.hpp"
#include "fatpt/verify.hpp"
#include "fatpt/builtin.hpp"
