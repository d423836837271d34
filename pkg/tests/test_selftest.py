# Copyright 2026 The blobkit Authors
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

"""Tests for the built-in invariant suite."""

import pytest
from testing_framework import _assert_equals, run_tracked_checks

from blobkit import ReportTracker
from blobkit.models import RunConfig
from blobkit.phasespace import default_grid
from blobkit.selftest import SUITE, run_selftest


@pytest.mark.parametrize("group", [name for name, _ in SUITE])
def test_group_passes(group: str) -> None:
    """Every check of the group holds on the default grid."""

    def checks(tracker: ReportTracker) -> None:
        run_selftest(tracker, default_grid(), groups=(group,))

    lines = run_tracked_checks(checks, RunConfig(command="selftest"))
    failing = [line["name"] for line in lines[:-1] if not line["pass"]]
    _assert_equals([], failing, group)
    assert len(lines) > 1, "no checks ran"


def test_groups_filter_the_suite() -> None:
    """Only the named groups run."""

    def checks(tracker: ReportTracker) -> None:
        run_selftest(tracker, default_grid(N=128), groups=("symplectic",))

    lines = run_tracked_checks(checks, RunConfig(command="selftest"))
    names = {line["name"] for line in lines[:-1]}
    assert all(not name.startswith("wigner") for name in names)


def test_suite_names_are_unique() -> None:
    """Group names double as command-line choices."""
    names = [name for name, _ in SUITE]
    _assert_equals(len(names), len(set(names)))
