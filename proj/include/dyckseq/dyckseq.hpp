#pragma once

#include "bijection.hpp"
#include "error.hpp"
#include "paths.hpp"
#include "sequences.hpp"
#include "text.hpp"
#include "verify.hpp"
