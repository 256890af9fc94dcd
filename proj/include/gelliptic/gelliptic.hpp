// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gelliptic/agm.hpp"
#include "gelliptic/elliptic.hpp"
#include "gelliptic/errors.hpp"
#include "gelliptic/hyp2f1.hpp"
#include "gelliptic/inequalities.hpp"
#include "gelliptic/mfunc.hpp"
#include "gelliptic/modulus.hpp"
#include "gelliptic/quadmod.hpp"
#include "gelliptic/quadrature.hpp"
#include "gelliptic/report.hpp"
#include "gelliptic/rootfind.hpp"
#include "gelliptic/scmap.hpp"
#include "gelliptic/seriesmono.hpp"
#include "gelliptic/specfun.hpp"
