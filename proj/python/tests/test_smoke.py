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

import json
from fractions import Fraction

import pytest

import astwist


def test_l_polynomial_5_1_1():
    assert astwist.l_polynomial(5, 1, 1) == [1, 0, 100, 0, 3750, 0, 62500, 0, 390625]
    assert astwist.l_polynomial(5, 1, 1, sextic=True) == astwist.l_polynomial(5, 1, 1)


def test_dossier_values():
    d = astwist.dossier(11, 2, 1)
    assert d["schema_version"] == astwist.SCHEMA_VERSION == 1
    assert astwist.rational(d["special_value"]["lstar"]) == 1
    assert astwist.rational(d["reg_sha"]["value"]) == 121
    assert d["rank"]["analytic"] == 20
    assert d["dim_sha"] == 1
    assert all(c["pass"] for c in d["checks"])

    d7 = astwist.dossier(7, 1, 1)
    assert astwist.rational(d7["special_value"]["lstar"]) == Fraction(1, 7)
    assert d7["special_value"]["ord_p"] == -1


def test_dossier_round_trip():
    text = astwist.dossier(5, 1, 1, oracle_max=2, raw=True)
    assert json.dumps(json.loads(text), indent=2, sort_keys=True, ensure_ascii=False) + "\n" == text


def test_choice_independence():
    a = astwist.dossier(5, 1, 1)
    b = astwist.dossier(5, 1, 1, generator_rank=1, psi_unit=2)
    assert a["choices"] != b["choices"]
    assert a["l_function"] == b["l_function"]


def test_oracle_matches_l():
    assert astwist.oracle(5, 1, 1, 4) == [0, -200, 0, 5000]
    assert astwist.oracle(5, 1, 1, 2, path="naive") == [0, -200]


def test_orbits_and_sha():
    table = astwist.orbits(5, 1, 1)
    assert len(table["orbits"]) == 4
    assert {o["size"] for o in table["orbits"]} == {2}
    assert astwist.sha(5, 1, 2)["dim_sha"] == 4
    assert astwist.dim_sha(5, 1, 3) == 20


def test_verify_subset():
    out = astwist.verify([(5, 1, 1)], only=["gauss"])
    assert out["failed"] == 0
    assert out["passed"] > 0


def test_sweep():
    csv = astwist.sweep(5, 1, [1, 2])
    lines = csv.strip().split("\n")
    assert len(lines) == 3
    assert lines[1].startswith('5,1,1,5,ok,0,"16/1"')


def test_errors():
    with pytest.raises(astwist.AstwistError):
        astwist.l_polynomial(9)
    with pytest.raises(ValueError):
        astwist.l_polynomial(3)
