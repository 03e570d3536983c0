/*
 * Copyright 2026 The impbench Authors
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

#ifndef IMPBENCH_TESTS_PREMISE_MATCHER_HPP_
#define IMPBENCH_TESTS_PREMISE_MATCHER_HPP_

#include <vector>

#include "impbench/sos.hpp"

namespace impbench::testing {

// Every SOS rule whose premises hold in c. Written against the public
// configuration view only, without consulting the engine's rule choice.
std::vector<int> matching_sos_rules(
    const sos::Configuration& c,
    const OperatorSemantics& sem = OperatorSemantics::standard());

}  // namespace impbench::testing

#endif  // IMPBENCH_TESTS_PREMISE_MATCHER_HPP_
