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

"""Exceptions and warnings raised by blobkit operations.

Every error derives from :class:`BlobkitError` so callers can catch the whole
family at once; most also derive from the matching builtin (``ValueError``,
``ArithmeticError``) so generic handlers keep working.
"""

import logging
import warnings
from typing import Type


class BlobkitError(Exception):
    """Base class for all blobkit errors."""


class InvalidDimensionError(BlobkitError, ValueError):
    """A matrix or vector has a dimension the operation cannot accept."""


class InvalidInputError(BlobkitError, ValueError):
    """An input violates a precondition (symmetry, positivity, finiteness)."""


class SchemaError(InvalidInputError):
    """A JSON input or run configuration does not match its schema."""


class NumericalDegeneracyError(BlobkitError, ArithmeticError):
    """A matrix is too ill-conditioned for the requested factorization."""


class ResolutionError(BlobkitError, ValueError):
    """A quadrature grid is too coarse for the requested accuracy."""


class NoFrameError(BlobkitError):
    """A Weyl-Heisenberg system has no usable lower frame bound."""


class SupportWarning(UserWarning):
    """Sampled data carries non-negligible mass at the grid edge."""


class TruncationWarning(UserWarning):
    """A truncated lattice sum leaves a non-negligible tail."""


def warn(
    logger: logging.Logger, category: Type[UserWarning], message: str
) -> None:
    """Issue a warning and mirror it to the given logger."""
    logger.warning("%s: %s", category.__name__, message)
    warnings.warn(message, category, stacklevel=3)
