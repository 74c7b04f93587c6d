#pragma once

#include "orientals/error.hpp"
#include "orientals/coefficient.hpp"
#include "orientals/simplex.hpp"
#include "orientals/linear.hpp"
#include "orientals/chain.hpp"
#include "orientals/membership.hpp"
#include "orientals/nu.hpp"
#include "orientals/oriental.hpp"
#include "orientals/factorize.hpp"
#include "orientals/io.hpp"
