#ifndef VSPLIT_VSPLIT_HPP
#define VSPLIT_VSPLIT_HPP

#include "vsplit/graph.hpp"
#include "vsplit/recognition.hpp"
#include "vsplit/splitting.hpp"
#include "vsplit/paths.hpp"
#include "vsplit/solvers.hpp"
#include "vsplit/families.hpp"
#include "vsplit/io.hpp"

#endif  // VSPLIT_VSPLIT_HPP
