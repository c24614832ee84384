#pragma once

// Umbrella header: the whole library in dependency order.

#include "errors.hpp"
#include "vertex_set.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"
#include "abelian_group.hpp"
#include "chain_complex.hpp"
#include "homology.hpp"
#include "parallel.hpp"
#include "hochster.hpp"
#include "splitting.hpp"
#include "sheaf.hpp"
#include "motivic.hpp"
#include "gw.hpp"
#include "cubical.hpp"
#include "koszul.hpp"
#include "affine.hpp"
#include "enumerate.hpp"
#include "random_complex.hpp"
#include "io.hpp"
