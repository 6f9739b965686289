# Copyright 2026 The walkernp Authors
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

"""Exact spin-coefficient analysis of Walker metrics.

Polynomials are passed and returned as expression strings in u, v, x, y,
for example "u^2*x - 1/2*v".
"""

from ._walkernp import (
    CausticError,
    IntegrationError,
    InvalidPotential,
    ParseError,
    classify,
    commutators,
    connecting_oracle,
    curvature,
    diff,
    einstein_check,
    evaluate,
    field_equations,
    heavenly_metric,
    integrate_connecting,
    parse,
    run_cli,
    spin_coefficients,
)

__all__ = [
    "CausticError",
    "IntegrationError",
    "InvalidPotential",
    "ParseError",
    "classify",
    "commutators",
    "connecting_oracle",
    "curvature",
    "diff",
    "einstein_check",
    "evaluate",
    "field_equations",
    "heavenly_metric",
    "integrate_connecting",
    "parse",
    "run_cli",
    "spin_coefficients",
]
