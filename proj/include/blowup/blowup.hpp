#pragma once

#include "blowup/chow.hpp"
#include "blowup/cohomology.hpp"
#include "blowup/config.hpp"
#include "blowup/curves.hpp"
#include "blowup/deformation.hpp"
#include "blowup/instanton.hpp"
#include "blowup/notation.hpp"
#include "blowup/rational.hpp"
#include "blowup/sheafdata.hpp"
#include "blowup/transform.hpp"
