#pragma once

#include "seqrank/errors.hpp"
#include "seqrank/experiments.hpp"
#include "seqrank/graph.hpp"
#include "seqrank/io.hpp"
#include "seqrank/rng.hpp"
#include "seqrank/rsk.hpp"
#include "seqrank/skeleton.hpp"
#include "seqrank/stats.hpp"
#include "seqrank/tableau.hpp"
#include "seqrank/triangular.hpp"
#include "seqrank/types.hpp"
#include "seqrank/version.hpp"
