"""Exception hierarchy shared across the package."""


class HbgError(Exception):
    """Base class for every error raised by hbgcat."""


class InvalidSpec(HbgError, ValueError):
    """A D3 spec violates range, parity or divisibility rules."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InvalidChordSet(HbgError, ValueError):
    """Chord targets do not form a perfect matching onto the even vertices."""


class NotCanonicalHBG(HbgError, ValueError):
    """Graph is not a cubic Hamiltonian bipartite graph in canonical labelling."""


class ParseError(HbgError, ValueError):
    pass


class InvalidLcf(HbgError, ValueError):
    pass


class OrderMismatch(HbgError, ValueError):
    pass


class InvalidProblem(HbgError, ValueError):
    pass


class ConflictError(HbgError):
    """Two catalog entries for the same key disagree on status."""


class IncompleteData(HbgError):
    """A catalog query needs cells that were never searched."""


class CatalogError(HbgError):
    """Catalog file is malformed or an entry fails re-verification."""
