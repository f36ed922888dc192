#pragma once

#include "minent/apps.hpp"
#include "minent/coloring.hpp"
#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/generators.hpp"
#include "minent/graph.hpp"
#include "minent/graph_entropy.hpp"
#include "minent/intervals.hpp"
#include "minent/io.hpp"
#include "minent/orientation.hpp"
#include "minent/set_system.hpp"
#include "minent/setcover.hpp"
