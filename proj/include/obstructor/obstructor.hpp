#pragma once

#include "obstructor/adversary_eval.hpp"
#include "obstructor/alternation.hpp"
#include "obstructor/base_graph.hpp"
#include "obstructor/io.hpp"
#include "obstructor/lattice_hull.hpp"
#include "obstructor/obstacle.hpp"
#include "obstructor/oracles.hpp"
#include "obstructor/parallel.hpp"
#include "obstructor/random.hpp"
#include "obstructor/report.hpp"
#include "obstructor/stretch.hpp"
#include "obstructor/undirected_graph.hpp"
#include "obstructor/verify.hpp"
