#pragma once

#include "metacirc/numtheory.hpp"
#include "metacirc/perm.hpp"
#include "metacirc/metagroup.hpp"
#include "metacirc/autparam.hpp"
#include "metacirc/graph.hpp"
#include "metacirc/cayley.hpp"
#include "metacirc/permgroup.hpp"
#include "metacirc/transitivity.hpp"
#include "metacirc/autosearch.hpp"
#include "metacirc/classify.hpp"
