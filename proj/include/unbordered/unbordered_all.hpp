// Copyright 2026 The unbordered Authors.
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

#ifndef UNBORDERED_UNBORDERED_ALL_HPP
#define UNBORDERED_UNBORDERED_ALL_HPP

#include "unbordered/bounds.hpp"
#include "unbordered/error.hpp"
#include "unbordered/experiment.hpp"
#include "unbordered/io.hpp"
#include "unbordered/reductions.hpp"
#include "unbordered/report.hpp"
#include "unbordered/sampling.hpp"
#include "unbordered/stringcore.hpp"
#include "unbordered/symbol_string.hpp"
#include "unbordered/unbordered.hpp"

#endif  // UNBORDERED_UNBORDERED_ALL_HPP
