#ifndef HYPERKNOW_HYPERKNOW_HPP
#define HYPERKNOW_HYPERKNOW_HPP

#include "hyperknow/errors.hpp"
#include "hyperknow/core.hpp"
#include "hyperknow/formula.hpp"
#include "hyperknow/parser.hpp"
#include "hyperknow/semantics.hpp"
#include "hyperknow/builtin.hpp"
#include "hyperknow/frames.hpp"
#include "hyperknow/kb4.hpp"
#include "hyperknow/neighborhood.hpp"
#include "hyperknow/search.hpp"
#include "hyperknow/proof.hpp"

#endif  // HYPERKNOW_HYPERKNOW_HPP
