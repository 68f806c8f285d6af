#pragma once

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"
#include "deg3lab/core.hpp"
#include "deg3lab/isomorphism.hpp"
#include "deg3lab/io.hpp"
#include "deg3lab/trees.hpp"
#include "deg3lab/spectra.hpp"
#include "deg3lab/sequences.hpp"
#include "deg3lab/family.hpp"
