#pragma once

#include "deskew/bench.hpp"
#include "deskew/correct.hpp"
#include "deskew/detect.hpp"
#include "deskew/error.hpp"
#include "deskew/fixture.hpp"
#include "deskew/image.hpp"
#include "deskew/pnm.hpp"
#include "deskew/shear.hpp"
