#pragma once

#include "ffiter/codec.hpp"
#include "ffiter/core.hpp"
#include "ffiter/decompose.hpp"
#include "ffiter/error.hpp"
#include "ffiter/experiments.hpp"
#include "ffiter/generators.hpp"
#include "ffiter/io.hpp"
#include "ffiter/oracle.hpp"
#include "ffiter/report.hpp"
