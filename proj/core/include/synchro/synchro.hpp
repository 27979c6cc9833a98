#pragma once

#include "synchro/avoid.hpp"
#include "synchro/canonical.hpp"
#include "synchro/dfa.hpp"
#include "synchro/error.hpp"
#include "synchro/io.hpp"
#include "synchro/rational.hpp"
#include "synchro/search.hpp"
#include "synchro/sync.hpp"
