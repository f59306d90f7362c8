// SPDX-License-Identifier: MIT
#include "cardsig/svg.hpp"
