#pragma once

#include "parsep/arithmetic.hpp"
#include "parsep/checks.hpp"
#include "parsep/classes.hpp"
#include "parsep/families.hpp"
#include "parsep/io.hpp"
#include "parsep/maps.hpp"
#include "parsep/partition.hpp"
#include "parsep/qseries.hpp"
#include "parsep/report.hpp"
