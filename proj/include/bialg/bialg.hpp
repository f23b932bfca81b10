#pragma once

#include "bialg/rational.hpp"
#include "bialg/lincomb.hpp"
#include "bialg/linalg.hpp"
#include "bialg/tree.hpp"
#include "bialg/words.hpp"
#include "bialg/model.hpp"
#include "bialg/parse.hpp"
#include "bialg/free_as.hpp"
#include "bialg/free_trees.hpp"
#include "bialg/lie.hpp"
#include "bialg/relations.hpp"
#include "bialg/types.hpp"
#include "bialg/idempotents.hpp"
#include "bialg/structure.hpp"
#include "bialg/series.hpp"
#include "bialg/homology.hpp"
#include "bialg/tables.hpp"
#include "bialg/json_io.hpp"
#include "bialg/suite.hpp"
