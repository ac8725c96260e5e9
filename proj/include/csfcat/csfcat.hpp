#pragma once

// Umbrella header.

#include "csfcat/canonical.hpp"
#include "csfcat/caterpillar.hpp"
#include "csfcat/composition.hpp"
#include "csfcat/csf.hpp"
#include "csfcat/enumerate.hpp"
#include "csfcat/errors.hpp"
#include "csfcat/factorization.hpp"
#include "csfcat/lpolynomial.hpp"
#include "csfcat/partition.hpp"
#include "csfcat/sparse_polynomial.hpp"
#include "csfcat/tree.hpp"
#include "csfcat/trunk.hpp"
#include "csfcat/upolynomial.hpp"
#include "csfcat/verify.hpp"
