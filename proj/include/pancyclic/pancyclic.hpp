#pragma once

#include "pancyclic/certificate.hpp"
#include "pancyclic/errors.hpp"
#include "pancyclic/generators.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/graph_io.hpp"
#include "pancyclic/lemmas.hpp"
#include "pancyclic/oracles.hpp"
#include "pancyclic/random.hpp"
#include "pancyclic/report.hpp"
#include "pancyclic/theorems.hpp"
#include "pancyclic/toolbox.hpp"
#include "pancyclic/trace.hpp"
