"""Exception types shared across the package.

Three failure families are kept apart so callers (and the CLI) can map them
to distinct exit behaviour:

* ``InvalidSpecError``  -- a construction recipe is malformed (bad sizes,
  out-of-range or duplicate flips).
* ``DomainError``       -- arguments are outside an operation's domain
  (k too small, empty vertex set, non-bipartite input where a bipartition
  was declared).
* ``CapabilityError``   -- the request is well formed but beyond the
  implemented feasibility envelope (instance too large for an exact
  algorithm).  Callers should switch method rather than retry.
"""

from __future__ import annotations


class InvalidSpecError(ValueError):
    """A coloring construction specification is malformed."""


class DomainError(ValueError):
    """An argument lies outside the operation's mathematical domain."""


class CapabilityError(RuntimeError):
    """The instance exceeds the supported size/feasibility envelope."""
