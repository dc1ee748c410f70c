"""Exception taxonomy shared by all equik modules.

The CLI maps InputError to exit code 2 (bad or rejected input) and
UnsupportedError to exit code 3 (a model the tool does not provide).
"""


class EquikError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EquikError):
    """Malformed input or a violated precondition."""


class UnsupportedError(EquikError):
    """The request is well formed but no model is available for it."""


class FusionRingError(InputError):
    """A fusion-ring axiom failed; carries the axiom name and indices."""

    def __init__(self, axiom, indices, detail=""):
        self.axiom = axiom
        self.indices = tuple(indices)
        msg = f"fusion axiom {axiom!r} violated at indices {self.indices}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class LatticeContainmentError(InputError):
    """A claimed sublattice relation failed; carries a witness vector."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"lattice containment failed, witness vector {self.witness}")


class CapExceededError(InputError):
    """A configured work cap was exceeded."""
