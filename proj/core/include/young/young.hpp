#pragma once

#include "young/algebra.hpp"
#include "young/bruhat.hpp"
#include "young/errors.hpp"
#include "young/field.hpp"
#include "young/io.hpp"
#include "young/matrix.hpp"
#include "young/representations.hpp"
#include "young/shape.hpp"
#include "young/tableau.hpp"
#include "young/transition.hpp"
