#pragma once

// Dense linear algebra over GF(2).
#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"
#include "hcms/linalg.hpp"
#include "hcms/subspace.hpp"
