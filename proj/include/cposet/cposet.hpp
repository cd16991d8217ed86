#pragma once

#include "error.hpp"
#include "element_set.hpp"
#include "poset.hpp"
#include "complementation.hpp"
#include "substructures.hpp"
#include "theorems.hpp"
#include "corpus.hpp"
#include "io.hpp"
#include "report.hpp"
