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

#ifndef QUPIT_JSON_IO_H
#define QUPIT_JSON_IO_H

#include "json.hpp"
#include "qupit/affine.h"
#include "qupit/normal_form.h"
#include "qupit/phase_poly.h"
#include "qupit/semantics.h"

namespace qupit {

// nlohmann::json keeps object keys sorted, so dumps are stable.

/// Records {kind, wires, coeff} in monomial order.
nlohmann::json to_json(const PhasePoly &q);
/// {A: rows, b}.
nlohmann::json to_json(const AffineMap &g);
/// {d, n, fragment, A, b, phase}.
nlohmann::json to_json(const PhaseAffineSem &s);
/// {w, z, s, t, cz, cs, sc, ccz, affine_gates}; affine gates as text lines.
nlohmann::json to_json(const PhaseAffineNF &nf);

}  // namespace qupit

#endif  // QUPIT_JSON_IO_H
