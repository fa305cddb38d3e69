#pragma once

// Umbrella header for the evolution algebra toolkit.

#include "evoalg/algebra.hpp"
#include "evoalg/decompose.hpp"
#include "evoalg/digraph.hpp"
#include "evoalg/errors.hpp"
#include "evoalg/io.hpp"
#include "evoalg/oracle.hpp"
#include "evoalg/quotient.hpp"
#include "evoalg/radical.hpp"
#include "evoalg/rational.hpp"
