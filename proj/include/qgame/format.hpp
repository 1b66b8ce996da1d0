#pragma once

#include <string>

#include "qgame/game.hpp"

namespace qgame {

// Decimal with 12 significant digits ("%.12g"), C locale.
std::string decimal12(double v);

// Exact small-denominator fraction like "19/3" or "-17/6" when one with
// denominator <= max_den lies within tol of v; integers render bare;
// otherwise falls back to decimal12.
std::string rational_label(double v, int max_den = 64, double tol = 1e-9);

// "(0,1/2,1)" for classical profiles, "(sx,h,id)" for quantum ones.
std::string profile_label(const StrategyProfile& profile);

}
