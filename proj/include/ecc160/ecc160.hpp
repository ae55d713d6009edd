/*
 * Copyright (C) 2026 The ecc160 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "ecc160/bigmath.hpp"
#include "ecc160/binary_affine.hpp"
#include "ecc160/cost_model.hpp"
#include "ecc160/curve.hpp"
#include "ecc160/montgomery.hpp"
#include "ecc160/params.hpp"
#include "ecc160/protocols.hpp"
#include "ecc160/reference.hpp"
#include "ecc160/sha1.hpp"
