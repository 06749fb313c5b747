# Copyright 2026 The SCG Workbench Authors
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

"""Spatial congestion games on interference graphs.

Profiles are lists of 1-based resource indices, one per player. Payoffs are
returned as exact strings ("p" or "p/q").
"""

from ._core import (
    Instance,
    ResourceLimitError,
    construct,
    counterexample,
    fip_scan,
    generate,
    replay_trace,
    run_dynamics,
)

__all__ = [
    "Instance",
    "ResourceLimitError",
    "construct",
    "counterexample",
    "fip_scan",
    "generate",
    "replay_trace",
    "run_dynamics",
]
