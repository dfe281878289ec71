#pragma once

#include "jgbtda/cycles.hpp"
#include "jgbtda/error.hpp"
#include "jgbtda/export.hpp"
#include "jgbtda/homology.hpp"
#include "jgbtda/network.hpp"
#include "jgbtda/notation.hpp"
#include "jgbtda/overlap.hpp"
#include "jgbtda/pipeline.hpp"
#include "jgbtda/rational.hpp"
