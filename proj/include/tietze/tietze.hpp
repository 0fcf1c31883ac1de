// Umbrella header.
#pragma once

#include "tietze/criterion.hpp"
#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"
#include "tietze/fraction.hpp"
#include "tietze/gen_ext.hpp"
#include "tietze/linalg.hpp"
#include "tietze/mat2.hpp"
#include "tietze/normalizer.hpp"
#include "tietze/parser.hpp"
#include "tietze/polynomial.hpp"
#include "tietze/rational.hpp"
#include "tietze/render.hpp"
#include "tietze/report.hpp"
#include "tietze/solver.hpp"
