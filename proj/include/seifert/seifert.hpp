#pragma once

#include "abelian.hpp"
#include "asymptotics.hpp"
#include "euler_class.hpp"
#include "numeric.hpp"
#include "seifert_core.hpp"
#include "su11.hpp"
