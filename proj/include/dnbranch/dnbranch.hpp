#ifndef DNBRANCH_DNBRANCH_HPP
#define DNBRANCH_DNBRANCH_HPP

#include "dnbranch/core.hpp"
#include "dnbranch/crystal.hpp"
#include "dnbranch/dmod.hpp"
#include "dnbranch/error.hpp"
#include "dnbranch/io.hpp"
#include "dnbranch/oracle.hpp"

#endif  // DNBRANCH_DNBRANCH_HPP
