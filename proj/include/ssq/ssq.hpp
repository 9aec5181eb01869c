#pragma once

#include "ssq/bigint.hpp"
#include "ssq/core.hpp"
#include "ssq/enumerate.hpp"
#include "ssq/errors.hpp"
#include "ssq/families.hpp"
#include "ssq/gorenstein.hpp"
#include "ssq/hilbert.hpp"
