#pragma once

#include "rgsd/analysis.hpp"
#include "rgsd/fingerprint.hpp"
#include "rgsd/flow.hpp"
#include "rgsd/isomorphism.hpp"
#include "rgsd/language.hpp"
#include "rgsd/orbits.hpp"
#include "rgsd/presentation.hpp"
#include "rgsd/rewriting.hpp"
#include "rgsd/rgraph.hpp"
#include "rgsd/semigroup.hpp"
