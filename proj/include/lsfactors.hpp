#pragma once

// Umbrella header.

#include "lsfactors/errors.hpp"
#include "lsfactors/cyclo.hpp"
#include "lsfactors/scalar.hpp"
#include "lsfactors/factored_rf.hpp"
#include "lsfactors/rf_format.hpp"
#include "lsfactors/finite_field.hpp"
#include "lsfactors/truncated_field.hpp"
#include "lsfactors/characters.hpp"
#include "lsfactors/association.hpp"
#include "lsfactors/tate.hpp"
#include "lsfactors/gspin_root.hpp"
#include "lsfactors/ls_factors.hpp"
#include "lsfactors/galois.hpp"
#include "lsfactors/json_io.hpp"
#include "lsfactors/acceptance.hpp"
