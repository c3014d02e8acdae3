#pragma once

#include "transint/complexes.hpp"
#include "transint/error.hpp"
#include "transint/gallery.hpp"
#include "transint/groebner.hpp"
#include "transint/monomial.hpp"
#include "transint/monomial_ideal.hpp"
#include "transint/order.hpp"
#include "transint/parse.hpp"
#include "transint/polynomial.hpp"
#include "transint/random.hpp"
#include "transint/ring.hpp"
#include "transint/simplicial.hpp"
