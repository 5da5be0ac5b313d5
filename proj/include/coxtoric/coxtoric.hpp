#pragma once

#include "coxtoric/class_function.hpp"
#include "coxtoric/errors.hpp"
#include "coxtoric/euler.hpp"
#include "coxtoric/matrix.hpp"
#include "coxtoric/partition.hpp"
#include "coxtoric/polynomial.hpp"
#include "coxtoric/rational.hpp"
#include "coxtoric/root_system.hpp"
#include "coxtoric/symn.hpp"
#include "coxtoric/weyl_group.hpp"
