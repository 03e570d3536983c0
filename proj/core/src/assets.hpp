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

#ifndef IMPBENCH_SRC_ASSETS_HPP_
#define IMPBENCH_SRC_ASSETS_HPP_

#include <string_view>

namespace impbench::assets {

extern const std::string_view imp_ebnf;
extern const std::string_view sos_semantics_txt;
extern const std::string_view k_semantics_txt;
extern const std::string_view preamble_sos_txt;
extern const std::string_view preamble_k_txt;
extern const std::string_view task_state_txt;
extern const std::string_view preamble_nosem_txt;
extern const std::string_view task_rule_sos_txt;
extern const std::string_view task_rule_k_txt;
extern const std::string_view task_trace_sos_txt;
extern const std::string_view task_trace_k_txt;
extern const std::string_view suffix_state_txt;
extern const std::string_view suffix_state_cot_txt;
extern const std::string_view suffix_rule_txt;
extern const std::string_view suffix_rule_cot_txt;
extern const std::string_view suffix_trace_txt;
extern const std::string_view suffix_trace_cot_txt;

}  // namespace impbench::assets

#endif  // IMPBENCH_SRC_ASSETS_HPP_
