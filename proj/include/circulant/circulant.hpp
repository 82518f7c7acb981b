#pragma once

#include "circulant/algebra.hpp"
#include "circulant/curvature.hpp"
#include "circulant/fields.hpp"
#include "circulant/frames.hpp"
#include "circulant/pyramid.hpp"
#include "circulant/random.hpp"
#include "circulant/verify.hpp"
