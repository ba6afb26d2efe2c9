#pragma once

#include "oseq/binomial.hpp"
#include "oseq/error.hpp"
#include "oseq/osequence.hpp"
#include "oseq/monomial.hpp"
#include "oseq/lexideal.hpp"
#include "oseq/betti.hpp"
#include "oseq/level.hpp"
#include "oseq/oracle.hpp"
#include "oseq/json.hpp"
#include "oseq/sweep.hpp"
