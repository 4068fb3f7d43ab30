# Copyright 2026 The tracemaps authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Trace maps of two-letter substitutions.

Exact polynomial trace maps of unimodular 2x2 integer matrices and
invertible substitutions, the Fricke-Vogt invariant, and the symmetry
and reversing-symmetry groups with machine-checked certificates.
"""

import json as _json

from ._core import (
    DomainError,
    ParseError,
    TraceMap,
    VerificationError,
    classify_matrix,
    classify_substitution,
    compose,
    half_trace,
    invariant,
    orbit_csv,
)

__all__ = [
    "DomainError",
    "ParseError",
    "TraceMap",
    "VerificationError",
    "classify",
    "classify_matrix",
    "classify_substitution",
    "compose",
    "half_trace",
    "invariant",
    "orbit_csv",
]


def classify(text, kind="matrix"):
    """Classify an input and return the report as a dict.

    ``kind`` selects the input grammar: ``"matrix"`` for ``"a,b;c,d"`` or
    ``"substitution"`` for ``"a->WORD, b->WORD"``.
    """
    if kind == "matrix":
        raw = classify_matrix(text)
    elif kind == "substitution":
        raw = classify_substitution(text)
    else:
        raise ValueError(f"unknown input kind: {kind!r}")
    return _json.loads(raw)
