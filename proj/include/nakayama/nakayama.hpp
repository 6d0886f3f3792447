#pragma once

#include "nakayama/error.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/relations.hpp"
#include "nakayama/module.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/syzygy_filtration.hpp"
#include "nakayama/enumeration.hpp"
#include "nakayama/theorems.hpp"
