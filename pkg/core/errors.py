"""
Exception hierarchy for the numerical kernels.

Input problems derive from ValueError as well, so callers that only
know about ValueError still catch them.
"""


class AtlasError(Exception):
    """Base class for every error raised by the kernels."""


class ContractViolation(AtlasError, ValueError):
    """Shape mismatch or violated precondition."""


class NotInSLError(AtlasError, ValueError):
    """Matrix is singular or its determinant is not 1."""

    def __init__(self, detail: str = ""):
        super().__init__(f"not in SL(n,C){': ' + detail if detail else ''}")


class NotOnOrbitError(AtlasError, ValueError):
    """Spectrum does not match the characteristic element."""

    def __init__(self, detail: str = ""):
        super().__init__(f"not on orbit{': ' + detail if detail else ''}")


class DefectiveInputError(AtlasError, ValueError):
    """Matrix is not diagonalizable within tolerance."""

    def __init__(self, detail: str = ""):
        super().__init__(f"defective input{': ' + detail if detail else ''}")


class NotRegularError(AtlasError, ValueError):
    """Eigenvalues collide on a maximal-flag point."""

    def __init__(self, detail: str = ""):
        super().__init__(f"not a regular orbit point{': ' + detail if detail else ''}")


class IntegrationDivergedError(AtlasError):
    """Flow left the manifold beyond the renormalization tolerance."""

    def __init__(self, detail: str = ""):
        super().__init__(f"integration diverged{': ' + detail if detail else ''}")


class NotTransversalError(AtlasError, ValueError):
    """Pair of lines or flags is not in general position."""


class NotTangentError(AtlasError, ValueError):
    """Vector is not tangent to the manifold at the given point."""

    def __init__(self, detail: str = ""):
        super().__init__(f"not tangent{': ' + detail if detail else ''}")


class InternalConsistencyError(AtlasError):
    """A relation guaranteed by theory failed numerically."""
