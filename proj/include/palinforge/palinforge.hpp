#ifndef PALINFORGE_PALINFORGE_HPP
#define PALINFORGE_PALINFORGE_HPP

#include "analysis.hpp"
#include "codes.hpp"
#include "conservative.hpp"
#include "encoders.hpp"
#include "psi.hpp"
#include "reports.hpp"
#include "stream.hpp"
#include "theta.hpp"
#include "words.hpp"

#endif
