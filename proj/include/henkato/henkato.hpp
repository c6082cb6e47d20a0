#pragma once

#include "henkato/decide.hpp"
#include "henkato/errors.hpp"
#include "henkato/gaussian_rational.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/io.hpp"
#include "henkato/kato.hpp"
#include "henkato/reconstruct.hpp"
#include "henkato/series.hpp"
