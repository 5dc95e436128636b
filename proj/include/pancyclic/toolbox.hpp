#pragma once

#include "pancyclic/bfs_layering.hpp"
#include "pancyclic/bipartite.hpp"
#include "pancyclic/cores.hpp"
#include "pancyclic/paths.hpp"
