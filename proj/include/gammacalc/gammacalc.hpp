#pragma once

#include "gammacalc/error.hpp"
#include "gammacalc/polynomial.hpp"
#include "gammacalc/vertex_set.hpp"
#include "gammacalc/complex.hpp"
#include "gammacalc/homology.hpp"
#include "gammacalc/realroots.hpp"
#include "gammacalc/posets.hpp"
#include "gammacalc/coxeter.hpp"
#include "gammacalc/constructions.hpp"
#include "gammacalc/corpus.hpp"
#include "gammacalc/io.hpp"
