#pragma once

#include "semipath/axioms.hpp"
#include "semipath/bordering.hpp"
#include "semipath/counting.hpp"
#include "semipath/errors.hpp"
#include "semipath/instances.hpp"
#include "semipath/levinson.hpp"
#include "semipath/matrix.hpp"
#include "semipath/semiring.hpp"
#include "semipath/toeplitz.hpp"
