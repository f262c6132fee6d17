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

"""Random normed module semigroups and Hille-Yosida checks over finite atom spaces."""

import json
from fractions import Fraction

from ._rnsg import (  # noqa: F401
    AtomSpace,
    Error,
    Generator,
    bar_norm,
    certified_envelope,
    eta_norm,
    evaluate,
    exceedance_probability,
    expm,
    is_asu_bounded,
    l0_norm,
    op_norm,
    orbit_sup_norm,
    resolve_direct,
    resolve_laplace,
    semigroup_law_residual,
)
from . import _rnsg


def _config_text(config):
    return config if isinstance(config, str) else json.dumps(config)


def verify_hy(config):
    """Run the Hille-Yosida checks. Returns (exit_code, report dict)."""
    code, text = _rnsg.verify_hy(_config_text(config))
    return code, json.loads(text)


def renorm(config):
    """Run the renormalization checks. Returns (exit_code, report dict)."""
    code, text = _rnsg.renorm(_config_text(config))
    return code, json.loads(text)


def counterexample_report(seed=0):
    code, text = _rnsg.counterexample_report(seed)
    return code, json.loads(text)


def diff_quotient_exceedance(t, t0, eps):
    """Exact exceedance probability; arguments are Fractions, ints or decimal strings."""
    return Fraction(_rnsg.diff_quotient_exceedance(str(t), str(t0), str(eps)))


def ftc_gap():
    """(f(1) - f(0), integral of f') as exact Fractions."""
    a, b = _rnsg.ftc_gap()
    return Fraction(a), Fraction(b)
