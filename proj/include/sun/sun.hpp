#pragma once

#include "sun/errors.hpp"
#include "sun/rep_core.hpp"
#include "sun/coherent.hpp"
#include "sun/bargmann.hpp"
#include "sun/hypergeometric.hpp"
#include "sun/intelligent.hpp"
