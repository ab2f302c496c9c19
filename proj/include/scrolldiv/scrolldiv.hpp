#pragma once

#include "core.hpp"
#include "scroll.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "scroll_model.hpp"
#include "symbolic_power.hpp"
#include "groebner.hpp"
#include "resolution.hpp"
#include "betti.hpp"
#include "rees.hpp"
