#pragma once

// Exact invariant densities of beta-transformations: number fields with
// certified root enclosures, orbit classification, Renyi-Parry densities,
// the transfer operator, and coincidence analysis of the invariant measures.

#include "betaparry/coincidence.hpp"
#include "betaparry/decimal.hpp"
#include "betaparry/density.hpp"
#include "betaparry/dynamics.hpp"
#include "betaparry/errors.hpp"
#include "betaparry/harness.hpp"
#include "betaparry/number_field.hpp"
#include "betaparry/polynomial.hpp"
#include "betaparry/rational.hpp"
#include "betaparry/report.hpp"
#include "betaparry/transfer.hpp"
