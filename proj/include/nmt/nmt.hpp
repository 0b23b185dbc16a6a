#pragma once

#include "nmt/colored_graph.hpp"
#include "nmt/dot.hpp"
#include "nmt/ecg.hpp"
#include "nmt/families.hpp"
#include "nmt/iso.hpp"
#include "nmt/patterns.hpp"
#include "nmt/search.hpp"
#include "nmt/theorems.hpp"
