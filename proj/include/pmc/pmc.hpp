#pragma once

#include "pmc/cartan.hpp"
#include "pmc/crystal.hpp"
#include "pmc/errors.hpp"
#include "pmc/monomial.hpp"
#include "pmc/product.hpp"
#include "pmc/specht.hpp"
#include "pmc/truncation.hpp"
#include "pmc/typea.hpp"
#include "pmc/weightring.hpp"
