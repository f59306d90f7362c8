// SPDX-License-Identifier: MIT
#include "cardsig/reduce.hpp"
