# Copyright 2026 The astwist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""BSD invariants of y^2 = x^3 + t^q - t over F_r(t)."""

import json
from fractions import Fraction

from . import _core
from ._core import SCHEMA_VERSION, AstwistError, dim_sha

__all__ = [
    "SCHEMA_VERSION",
    "AstwistError",
    "dim_sha",
    "dossier",
    "l_polynomial",
    "oracle",
    "orbits",
    "rational",
    "sha",
    "sweep",
    "verify",
]


def rational(text):
    """Parse the "n/d" strings used in dossiers."""
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def l_polynomial(p, nu=1, f=1, sextic=False):
    return [int(c) for c in _core.l_polynomial(p, nu, f, sextic)]


def dossier(p, nu=1, f=1, oracle_max=0, generator_rank=0, psi_unit=1, raw=False):
    text = _core.dossier(p, nu, f, oracle_max, generator_rank, psi_unit)
    return text if raw else json.loads(text)


def oracle(p, nu=1, f=1, n_max=4, path="transform"):
    return [int(c) for c in _core.oracle(p, nu, f, n_max, path)]


def orbits(p, nu=1, f=1, n=6):
    return json.loads(_core.orbits(p, nu, f, n))


def sha(p, nu=1, f=1):
    return json.loads(_core.sha(p, nu, f))


def verify(grid=(), only=(), oracle_max=4):
    return json.loads(_core.verify(list(grid), list(only), oracle_max))


def sweep(p, nu, f_list):
    return _core.sweep(p, nu, list(f_list))
