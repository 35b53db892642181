#pragma once

#include "abgroup.hpp"
#include "ariadne.hpp"
#include "correspondence.hpp"
#include "errors.hpp"
#include "functor_lab.hpp"
#include "io.hpp"
#include "lincomb.hpp"
#include "matrix.hpp"
#include "matrix_functor.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "multiset.hpp"
#include "presentation.hpp"
#include "pretty.hpp"
#include "quotient.hpp"
#include "scalar.hpp"
#include "verify.hpp"
