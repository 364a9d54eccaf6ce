// SPDX-License-Identifier: Apache-2.0
//
// nsmimo: correlation modelling for MIMO channels in non-separable scattering
// Copyright (C) 2026 The nsmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NSMIMO_NSMIMO_HPP
#define NSMIMO_NSMIMO_HPP

#include "angles.hpp"
#include "bessel.hpp"
#include "capacity.hpp"
#include "correlation.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "geometry.hpp"
#include "psd.hpp"
#include "quadrature.hpp"
#include "smf.hpp"
#include "version.hpp"

#endif
