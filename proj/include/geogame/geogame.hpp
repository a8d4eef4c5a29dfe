// Copyright 2026 The geogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEOGAME_GEOGAME_HPP
#define GEOGAME_GEOGAME_HPP

// Umbrella header: the whole library in one include.

#include "geogame/errors.hpp"
#include "geogame/io.hpp"
#include "geogame/model.hpp"
#include "geogame/optimize.hpp"
#include "geogame/stability.hpp"
#include "geogame/sweep.hpp"

#endif  // GEOGAME_GEOGAME_HPP
