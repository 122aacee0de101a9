#pragma once

#include "treepark/bijection.hpp"
#include "treepark/error.hpp"
#include "treepark/parking.hpp"
#include "treepark/permutation.hpp"
#include "treepark/plane_tree.hpp"
#include "treepark/series.hpp"
#include "treepark/series_lab.hpp"
#include "treepark/tree.hpp"
#include "treepark/verify.hpp"
