#pragma once

#include "rosegbs/bigint.hpp"
#include "rosegbs/builtin_catalog.hpp"
#include "rosegbs/classifier.hpp"
#include "rosegbs/generators.hpp"
#include "rosegbs/numtheory.hpp"
#include "rosegbs/pcgroup.hpp"
#include "rosegbs/presentation.hpp"
#include "rosegbs/quotients.hpp"
#include "rosegbs/verify.hpp"
