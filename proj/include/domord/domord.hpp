#pragma once

#include "domord/matching.hpp"
#include "domord/parallel.hpp"
#include "domord/partitions.hpp"
#include "domord/poly.hpp"
#include "domord/prob.hpp"
#include "domord/rational.hpp"
#include "domord/reports.hpp"
#include "domord/sequences.hpp"
#include "domord/tn.hpp"
