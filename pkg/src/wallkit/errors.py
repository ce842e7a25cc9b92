"""Exception types.

Every precondition failure raised by the library derives from
``PreconditionError`` and carries a short machine-readable ``code`` that the
command line front end reports on stderr.
"""


class WallkitError(Exception):
    code = "error"


class PreconditionError(WallkitError, ValueError):
    code = "precondition"


class UnknownName(PreconditionError):
    code = "unknown_name"


class LatticeMismatch(PreconditionError):
    code = "lattice_mismatch"


class ZeroVector(PreconditionError):
    code = "zero_vector"


class NotPrimitive(PreconditionError):
    code = "not_primitive"


class DegenerateLattice(PreconditionError):
    code = "degenerate"


class NotNegativeDefinite(PreconditionError):
    code = "not_negative_definite"


class NotInDual(PreconditionError):
    code = "not_in_dual"


class NotAnIsometry(PreconditionError):
    code = "not_an_isometry"


class NonIntegral(PreconditionError):
    code = "non_integral"


class ZeroNorm(PreconditionError):
    code = "zero_norm"


class NoUSquare(PreconditionError):
    code = "no_u_square"


class InvariantMismatch(PreconditionError):
    code = "invariant_mismatch"

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("invariants differ: " + ", ".join(self.failures))


class NotInSublattice(PreconditionError):
    code = "not_in_sublattice"


class OmegaOnWall(PreconditionError):
    code = "omega_on_wall"


class NotPositive(PreconditionError):
    code = "not_positive"


class InfeasibleInvariants(WallkitError):
    """An invariant combination the dispatch table does not cover (a bug)."""

    code = "infeasible_invariants"


class InternalMismatch(WallkitError):
    """Two independent computations disagreed (a bug)."""

    code = "internal_mismatch"
