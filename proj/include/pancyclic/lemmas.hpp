#pragma once

#include "pancyclic/absorption.hpp"
#include "pancyclic/bridge.hpp"
#include "pancyclic/consecutive_paths.hpp"
#include "pancyclic/efrs.hpp"
#include "pancyclic/long_cycles.hpp"
