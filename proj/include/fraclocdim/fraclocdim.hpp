#pragma once

#include "fraclocdim/vertex_set.hpp"
#include "fraclocdim/graph.hpp"
#include "fraclocdim/io.hpp"
#include "fraclocdim/families.hpp"
#include "fraclocdim/family_string.hpp"
#include "fraclocdim/resolve.hpp"
#include "fraclocdim/rational.hpp"
#include "fraclocdim/lp.hpp"
#include "fraclocdim/symmetry.hpp"
#include "fraclocdim/analysis.hpp"
#include "fraclocdim/harness.hpp"
#include "fraclocdim/report.hpp"
