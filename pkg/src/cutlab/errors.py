"""Exception types shared across the package."""

from __future__ import annotations


class CutlabError(Exception):
    """Base class for all package errors."""


# ---- graph construction ----

class SelfLoop(CutlabError):
    pass


class DuplicateEdge(CutlabError):
    pass


class DanglingId(CutlabError):
    pass


class BadParams(CutlabError):
    pass


class NoFrontier(CutlabError):
    """Raised when an operation needs a window frontier and there is none."""


class StabilityError(CutlabError):
    """A window classifier disagreed with itself at inner radius m and m+1."""

    def __init__(self, message, at_m=None, at_m1=None):
        super().__init__(message)
        self.at_m = at_m
        self.at_m1 = at_m1


# ---- cut algebra ----

class GraphMismatch(CutlabError):
    pass


class Inadmissible(CutlabError):
    """Cut coboundary touches a frontier-incident edge of a window."""


class ShadowSplit(CutlabError):
    """A window-end shadow met both sides of a cut (strict mode only)."""


class DimensionMismatch(CutlabError):
    pass


# ---- search ----

class BudgetExceeded(CutlabError):
    def __init__(self, message, expanded=0, budget=0):
        super().__init__(message)
        self.expanded = expanded
        self.budget = budget


class KMaxExhausted(CutlabError):
    """No separating cut found up to k_max; carries the partial verdict."""

    def __init__(self, message, k_max=0, separating_unconstrained=None):
        super().__init__(message)
        self.k_max = k_max
        self.separating_unconstrained = separating_unconstrained


class IncompleteNestedSet(CutlabError):
    def __init__(self, message, rank=0, target=0):
        super().__init__(message)
        self.rank = rank
        self.target = target


# ---- peripheral structure ----

class NotElliptic(CutlabError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InadmissibleLift(CutlabError):
    """Lift coboundary would touch the frontier: the non-tameness certificate."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EllipticityViolation(CutlabError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoSeparator(CutlabError):
    pass


# ---- structure trees ----

class NotNested(CutlabError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ContainsTrivial(CutlabError):
    pass


class InadmissiblePullback(CutlabError):
    pass


class NoFixedVertex(CutlabError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# ---- cycle space ----

class NoSequence(CutlabError):
    """No alternating edge/cycle sequence exists: signals a broken invariant."""
