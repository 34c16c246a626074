#pragma once

#include "wenum/balance.hpp"
#include "wenum/binary_word.hpp"
#include "wenum/designs.hpp"
#include "wenum/enumerator.hpp"
#include "wenum/error.hpp"
#include "wenum/krawtchouk.hpp"
#include "wenum/linear_code.hpp"
#include "wenum/quadrat.hpp"
#include "wenum/rational.hpp"
#include "wenum/reference.hpp"
#include "wenum/transform.hpp"
#include "wenum/verify.hpp"
