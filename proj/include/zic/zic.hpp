#pragma once

#include "zic/correspondence.hpp"
#include "zic/det_channel.hpp"
#include "zic/det_regions.hpp"
#include "zic/det_schemes.hpp"
#include "zic/errors.hpp"
#include "zic/gauss_regions.hpp"
#include "zic/region_geom.hpp"
#include "zic/serialize.hpp"
