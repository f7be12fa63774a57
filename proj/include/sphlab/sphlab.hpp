#pragma once

// Umbrella header: the whole library.

#include "sphlab/cartan.hpp"
#include "sphlab/complex_rational.hpp"
#include "sphlab/context.hpp"
#include "sphlab/cosets.hpp"
#include "sphlab/coweight.hpp"
#include "sphlab/errors.hpp"
#include "sphlab/finite_quotient.hpp"
#include "sphlab/group_element.hpp"
#include "sphlab/hecke.hpp"
#include "sphlab/hermitian_eig.hpp"
#include "sphlab/iwasawa.hpp"
#include "sphlab/json_io.hpp"
#include "sphlab/laurent.hpp"
#include "sphlab/matrix.hpp"
#include "sphlab/positivity.hpp"
#include "sphlab/rational.hpp"
#include "sphlab/satake.hpp"
#include "sphlab/spherical.hpp"
#include "sphlab/transform.hpp"
