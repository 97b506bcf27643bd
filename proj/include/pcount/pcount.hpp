#pragma once

#include "pcount/count.hpp"
#include "pcount/oracle.hpp"
#include "pcount/pentagonal.hpp"
#include "pcount/ptable.hpp"
#include "pcount/restricted.hpp"
#include "pcount/verify.hpp"
