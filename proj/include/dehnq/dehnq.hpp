#pragma once

#include "core.hpp"
#include "reversing.hpp"
#include "garside.hpp"
#include "centralizer.hpp"
#include "finite.hpp"
#include "simplify.hpp"
#include "io.hpp"
#include "catalog.hpp"
