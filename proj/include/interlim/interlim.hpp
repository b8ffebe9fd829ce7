#pragma once

#include "combinat/counting.hpp"
#include "combinat/decomposition.hpp"
#include "combinat/dyck.hpp"
#include "combinat/matching.hpp"
#include "combinat/permutation.hpp"
#include "combinat/phi.hpp"
#include "combinat/symmetry.hpp"
#include "core/bigcount.hpp"
#include "core/parallel.hpp"
#include "core/random.hpp"
#include "core/stats.hpp"
#include "experiments/exact_suite.hpp"
#include "experiments/monte_carlo.hpp"
#include "experiments/report.hpp"
#include "experiments/unit_interval.hpp"
#include "graphon/graphon.hpp"
#include "graphon/proxy.hpp"
#include "graphon/step.hpp"
#include "graphs/builders.hpp"
#include "graphs/canonical.hpp"
#include "graphs/cliques.hpp"
#include "graphs/distance.hpp"
#include "graphs/io.hpp"
#include "graphs/modules.hpp"
#include "graphs/realizers.hpp"
#include "graphs/ugraph.hpp"
#include "mmspace/excursion.hpp"
#include "mmspace/gp.hpp"
#include "mmspace/mmspace.hpp"
