#pragma once

#include "cycleindex/covering.hpp"
#include "cycleindex/error.hpp"
#include "cycleindex/graph.hpp"
#include "cycleindex/inertia.hpp"
#include "cycleindex/kuramoto.hpp"
#include "cycleindex/oracle.hpp"
#include "cycleindex/spectral.hpp"
