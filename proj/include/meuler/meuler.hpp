// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEULER_MEULER_HPP_
#define MEULER_MEULER_HPP_

#include "meuler/arithmetic.hpp"
#include "meuler/catalog.hpp"
#include "meuler/chow_expansion.hpp"
#include "meuler/composition.hpp"
#include "meuler/element_set.hpp"
#include "meuler/error.hpp"
#include "meuler/linear_algebra.hpp"
#include "meuler/localization.hpp"
#include "meuler/matroid.hpp"
#include "meuler/matroid_io.hpp"
#include "meuler/pmd.hpp"
#include "meuler/recursion.hpp"
#include "meuler/tutte.hpp"

#endif  // MEULER_MEULER_HPP_
