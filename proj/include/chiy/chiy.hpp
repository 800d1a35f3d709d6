#pragma once

// Umbrella header for the exact chi_y-genus and Hirzebruch-class library.

#include "chiy/derived.hpp"
#include "chiy/descriptor_json.hpp"
#include "chiy/errors.hpp"
#include "chiy/graded.hpp"
#include "chiy/hirzebruch.hpp"
#include "chiy/linalg.hpp"
#include "chiy/partition.hpp"
#include "chiy/polynomial.hpp"
#include "chiy/rational.hpp"
#include "chiy/reconstruction.hpp"
#include "chiy/series.hpp"
#include "chiy/varieties.hpp"
#include "chiy/verify.hpp"
