#pragma once

#include "galois.hpp"
#include "algebra.hpp"
#include "code.hpp"
#include "constructions.hpp"
#include "search.hpp"
#include "bounds.hpp"
