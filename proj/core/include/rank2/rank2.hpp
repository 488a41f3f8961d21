#pragma once

#include "rank2/algebra.hpp"
#include "rank2/errors.hpp"
#include "rank2/format.hpp"
#include "rank2/girdle.hpp"
#include "rank2/landscape.hpp"
#include "rank2/laurent.hpp"
#include "rank2/reduce.hpp"
#include "rank2/render.hpp"
#include "rank2/tables.hpp"
#include "rank2/weight_diagram.hpp"
