#pragma once

#include "qf2/sampling.hpp"
