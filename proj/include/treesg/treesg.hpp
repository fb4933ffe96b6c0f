#pragma once

#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"
#include "treesg/piping.hpp"
#include "treesg/polytope.hpp"
#include "treesg/gorenstein.hpp"
#include "treesg/json_io.hpp"
#include "treesg/survey.hpp"
