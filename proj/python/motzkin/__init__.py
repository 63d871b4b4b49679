# Copyright 2026 The Motzkin Authors
# SPDX-License-Identifier: Apache-2.0
"""Exact and asymptotic computations for colored Motzkin spin chains."""

from ._motzkin import *  # noqa: F401,F403
from ._motzkin import GuardError, ParameterError  # noqa: F401

__version__ = "0.1.0"
