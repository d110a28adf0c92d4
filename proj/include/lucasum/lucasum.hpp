// Copyright 2026 The lucasum Authors
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

#pragma once

#include "lucasum/errors.hpp"
#include "lucasum/harmonic.hpp"
#include "lucasum/integer.hpp"
#include "lucasum/lucas.hpp"
#include "lucasum/modular.hpp"
#include "lucasum/numtheory.hpp"
#include "lucasum/polynomial.hpp"
#include "lucasum/sum_engine.hpp"
#include "lucasum/verifier/identity.hpp"
#include "lucasum/verifier/registry.hpp"
#include "lucasum/verifier/report.hpp"
#include "lucasum/verifier/verify.hpp"
