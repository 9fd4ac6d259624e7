#pragma once

#include "cjac/abel.hpp"
#include "cjac/classgroup.hpp"
#include "cjac/error.hpp"
#include "cjac/graph.hpp"
#include "cjac/linalg.hpp"
#include "cjac/multidegree.hpp"
#include "cjac/picard.hpp"
#include "cjac/stability.hpp"
#include "cjac/theta.hpp"
