#pragma once

#include "freytools/arith.hpp"
#include "freytools/denes.hpp"
#include "freytools/frey.hpp"
#include "freytools/report.hpp"
#include "freytools/search.hpp"
#include "freytools/tate.hpp"
#include "freytools/traces.hpp"
#include "freytools/version.hpp"
#include "freytools/weierstrass.hpp"
