#pragma once

#include "moufang/algebra.hpp"
#include "moufang/digest.hpp"
#include "moufang/errors.hpp"
#include "moufang/fixtures.hpp"
#include "moufang/linalg.hpp"
#include "moufang/rational.hpp"
#include "moufang/report.hpp"
#include "moufang/serialize.hpp"
#include "moufang/suites.hpp"
#include "moufang/triality.hpp"
#include "moufang/version.hpp"
#include "moufang/yamaguti.hpp"
