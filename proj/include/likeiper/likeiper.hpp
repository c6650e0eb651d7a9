#pragma once

#include "likeiper/big_complex.hpp"
#include "likeiper/big_real.hpp"
#include "likeiper/binomial.hpp"
#include "likeiper/constants.hpp"
#include "likeiper/data_file.hpp"
#include "likeiper/format.hpp"
#include "likeiper/golden.hpp"
#include "likeiper/lambda.hpp"
#include "likeiper/power_series.hpp"
#include "likeiper/probe.hpp"
#include "likeiper/recurrences.hpp"
#include "likeiper/scalar.hpp"
#include "likeiper/stieltjes.hpp"
#include "likeiper/zeros.hpp"
