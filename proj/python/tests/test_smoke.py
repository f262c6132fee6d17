# Copyright 2026 The rnsg Authors
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

import json
import math
import pathlib
from fractions import Fraction

import numpy as np
import pytest

import rnsg

CONFIGS = pathlib.Path(__file__).resolve().parents[2] / "configs"


def test_norm_is_pointwise_euclidean():
    space = rnsg.AtomSpace([0.25, 0.75])
    x = np.array([[3.0, 4.0], [0.0, 1.0]])
    assert rnsg.l0_norm(space, x) == pytest.approx([5.0, 1.0])
    # Only the first atom exceeds 2, and it carries mass 0.25.
    assert rnsg.exceedance_probability(space, x, 2.0) == pytest.approx(0.25)


def test_bad_probabilities_raise():
    with pytest.raises(rnsg.Error, match="UnnormalizedProbabilities"):
        rnsg.AtomSpace([0.5, 0.2])


def test_semigroup_matches_closed_form():
    space = rnsg.AtomSpace([1.0])
    rot = rnsg.Generator(space, [np.array([[0.0, 1.0], [-1.0, 0.0]])])
    t = 0.7
    (T,) = rnsg.evaluate(rot, t)
    expected = np.array([[math.cos(t), math.sin(t)], [-math.sin(t), math.cos(t)]])
    assert np.allclose(T, expected, atol=1e-13)
    assert rnsg.semigroup_law_residual(rot, 0.3, 1.1)[0] < 1e-12


def test_resolvent_direct_and_laplace_agree():
    space = rnsg.AtomSpace([0.5, 0.5])
    A = [np.array([[-1.0, 2.0], [0.0, -0.5]]), np.array([[-0.2, 0.0], [1.0, -0.3]])]
    G = rnsg.Generator(space, A)
    x = np.array([[1.0, -1.0], [0.5, 2.0]])
    R, _ = rnsg.resolve_direct(G, 1.5)
    lap = rnsg.resolve_laplace(G, 1.5, x)
    for i in range(2):
        assert np.allclose(R[i] @ x[i], lap["value"][i], atol=1e-8)


def test_jordan_block_envelope():
    space = rnsg.AtomSpace([1.0])
    J = rnsg.Generator(space, [np.array([[0.0, 1.0], [0.0, 0.0]])])
    env = rnsg.certified_envelope(J)
    assert env["global"] == [True]
    assert env["tau"][0] > 0.0
    assert rnsg.is_asu_bounded(J) == [False]


def test_verify_hy_from_config_file():
    code, report = rnsg.verify_hy((CONFIGS / "jordan.json").read_text())
    assert code == 0
    body = report["body"]
    assert body["command"] == "verify-hy"
    assert body["results"]["verdict"] == "consistent"


def test_contraction_envelope_is_rejected():
    code, report = rnsg.verify_hy(json.loads((CONFIGS / "jordan_contraction.json").read_text()))
    assert code == 2
    assert report["body"]["results"]["verdict"] == "violated"


def test_renorm_stable_diagonal():
    code, report = rnsg.renorm((CONFIGS / "stable_diagonal.json").read_text())
    assert code == 0


def test_counterexample_is_exact():
    assert rnsg.ftc_gap() == (Fraction(-1), Fraction(0))
    assert rnsg.diff_quotient_exceedance(Fraction(1, 2), Fraction(1, 4), 3) == Fraction(1, 4)
    assert rnsg.diff_quotient_exceedance("0.5", "0.25", 5) == 0
    code, report = rnsg.counterexample_report(seed=1)
    assert code == 0
    assert report["body"]["results"]["gap"]["endpoint_difference"] == "-1"


def test_report_body_is_deterministic():
    text = (CONFIGS / "stable_diagonal.json").read_text()
    _, a = rnsg.verify_hy(text)
    _, b = rnsg.verify_hy(text)
    assert a["body"] == b["body"]
