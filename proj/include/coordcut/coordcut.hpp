#pragma once

#include "coordcut/cut_network.hpp"
#include "coordcut/encodings.hpp"
#include "coordcut/errors.hpp"
#include "coordcut/flow.hpp"
#include "coordcut/gadget.hpp"
#include "coordcut/graph.hpp"
#include "coordcut/mwdp.hpp"
#include "coordcut/polymatrix.hpp"
#include "coordcut/rational.hpp"
#include "coordcut/solvers.hpp"
#include "coordcut/threshold.hpp"
#include "coordcut/types.hpp"
#include "coordcut/version.hpp"
