#pragma once

// Umbrella header for the comtrace algebra toolkit.

#include "comtrace/alphabet.hpp"
#include "comtrace/cdgraph.hpp"
#include "comtrace/congruence.hpp"
#include "comtrace/error.hpp"
#include "comtrace/io.hpp"
#include "comtrace/lsos.hpp"
#include "comtrace/relation.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"
#include "comtrace/transform.hpp"
