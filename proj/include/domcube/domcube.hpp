#pragma once

#include "domcube/dom_graph.hpp"
#include "domcube/domination.hpp"
#include "domcube/enumeration.hpp"
#include "domcube/errors.hpp"
#include "domcube/families.hpp"
#include "domcube/graph.hpp"
#include "domcube/graph_io.hpp"
#include "domcube/isomorphism.hpp"
#include "domcube/metric.hpp"
#include "domcube/verify.hpp"
#include "domcube/vertex_set.hpp"
