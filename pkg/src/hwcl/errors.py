"""Exception types shared across the package."""


class HwclError(Exception):
    """Base class for all errors raised by hwcl."""


class ParseError(HwclError, ValueError):
    """Malformed textual input (weights, group specs)."""


class CapExceededError(HwclError):
    """A size cap on an explicit tensor-space construction was exceeded."""


class ContractViolation(HwclError):
    """A numerical postcondition failed beyond its tolerance."""


class DegeneratePatternError(HwclError, ValueError):
    """The chosen phase pattern acts trivially on every witness vector."""


class CompatibilityError(HwclError, ValueError):
    """Conditional-cocycle data violates v_n - v_m in H_m for m <= n."""

    def __init__(self, message, m=None, n=None):
        super().__init__(message)
        self.m = m
        self.n = n
