#pragma once

#include "ttree/config.hpp"
#include "ttree/counting.hpp"
#include "ttree/error.hpp"
#include "ttree/order.hpp"
#include "ttree/problem.hpp"
#include "ttree/search.hpp"
#include "ttree/text.hpp"
#include "ttree/tree.hpp"
#include "ttree/types.hpp"
