# Copyright 2026 The heliwave Authors
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

"""Wigner phases, fixed-point correlations and Lorentz-invariant photon qubits."""

from ._heliwave import (  # noqa: F401
    ConsistencyError,
    DomainError,
    EmptyPacketError,
    Error,
    ExcludedDirectionError,
    FourMomentum,
    LorentzTransform,
    NullOutcomeError,
    RangeError,
    SingularityError,
    bz,
    compare,
    effective_density_matrix,
    fixed_point_curves,
    measure,
    normal_form,
    parse_lambda,
    run_cli,
    ry,
    rz,
    wigner_angle,
    wigner_angle_ry,
)

__version__ = "0.1.0"
