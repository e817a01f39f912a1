#pragma once

#include "shs/errors.hpp"
#include "shs/graph.hpp"
#include "shs/connectivity.hpp"
#include "shs/topk.hpp"
#include "shs/greedy.hpp"
#include "shs/score_index.hpp"
#include "shs/cut_vertices.hpp"
#include "shs/tracker.hpp"
#include "shs/generators.hpp"
#include "shs/edge_list.hpp"
#include "shs/update_stream.hpp"
#include "shs/features.hpp"
#include "shs/bench.hpp"
#include "shs/oracle_check.hpp"
