/*
   Copyright 2026 The spetses Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#pragma once

#include "catalan.hpp"
#include "cyclotomic.hpp"
#include "degrees.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "fourier.hpp"
#include "group.hpp"
#include "laurent.hpp"
#include "mpartition.hpp"
#include "rational.hpp"
#include "reprs.hpp"
#include "serialize.hpp"
#include "symbol.hpp"
