#pragma once

#include "algebra.hpp"
#include "bar.hpp"
#include "checks.hpp"
#include "contraction.hpp"
#include "io.hpp"
#include "model.hpp"
#include "perturbation.hpp"
