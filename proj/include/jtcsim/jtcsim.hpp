// Copyright 2026 The jtcsim Authors
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

#include "jtcsim/config.hpp"
#include "jtcsim/density.hpp"
#include "jtcsim/evolution.hpp"
#include "jtcsim/frames.hpp"
#include "jtcsim/linalg.hpp"
#include "jtcsim/model.hpp"
#include "jtcsim/oracle.hpp"
#include "jtcsim/pipeline.hpp"
#include "jtcsim/reinsertion.hpp"
#include "jtcsim/stabilizer.hpp"
#include "jtcsim/syndrome.hpp"
#include "jtcsim/validation.hpp"
