#pragma once

// Umbrella header for the dyckstat library: Dyck-path interval statistics
// (exhaustive oracle and closed forms), ballot-style lattice-path counting,
// the executable path bijections behind those counts, and the wreath
// witness machinery for Z_{2k+1} (verification, exact-cover search, JSON
// witness files).

#include "dyckstat/ballot.hpp"
#include "dyckstat/bigcount.hpp"
#include "dyckstat/bijections.hpp"
#include "dyckstat/dyck.hpp"
#include "dyckstat/errors.hpp"
#include "dyckstat/formulas.hpp"
#include "dyckstat/search.hpp"
#include "dyckstat/subsets.hpp"
#include "dyckstat/witness_io.hpp"
#include "dyckstat/wreath.hpp"
