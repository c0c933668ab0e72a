// Copyright 2026 The Qupit Authors
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


#ifndef QUPIT_GROUP_PRESENTATION_H
#define QUPIT_GROUP_PRESENTATION_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qupit/affine.h"
#include "qupit/field.h"

namespace qupit {

enum class GroupFamily { SL, GL, AGL };

std::string_view group_family_name(GroupFamily f);

/// Abstract generator raised to a literal integer power. Transvection(i, j)
/// is I + e_{j,i} (x_j += x_i); Scale(k) is diag(k, 1, ..., 1);
/// Translation(i) adds 1 to coordinate i. Wires are 0-based.
struct Letter {
    enum class Kind { Transvection, Scale, Translation } kind;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint64_t k = 1;
    std::uint64_t power = 1;
};

using Word = std::vector<Letter>;

/// Product of the letters as matrices, in written order (so the rightmost
/// letter acts first). Powers are repeated multiplication.
AffineMap evaluate_word(const Word &w, std::size_t n, const FieldCtx &ctx);

struct GroupRelation {
    std::string id;
    std::vector<std::pair<std::string, std::uint64_t>> params;
    Word lhs;
    Word rhs;

    std::string label() const;
};

/// Every instance of the relations of the family, all parameters expanded.
/// Torus and Weyl are only present for n = 2.
std::vector<GroupRelation> group_relations(std::size_t n, const FieldCtx &ctx, GroupFamily family);

struct GroupVerdict {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
        return failures.empty();
    }
};

GroupVerdict verify_group_presentation(std::size_t n, const FieldCtx &ctx, GroupFamily family);

}  // namespace qupit

#endif  // QUPIT_GROUP_PRESENTATION_H
