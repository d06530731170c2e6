"""Exception types shared across the package."""


class PlabicError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(PlabicError):
    """Input violates a precondition (bad residue, mismatched sizes, ...)."""


class DegenerateInputError(PlabicError):
    """Operation applied to input it is undefined for (e.g. blocks of an interval)."""


class CrossingPairError(InvalidInputError):
    """Two subsets of a would-be cluster cross; carries the witness 4-tuple."""

    def __init__(self, first, second, witness):
        self.first = first
        self.second = second
        self.witness = witness
        super().__init__(
            f"{first.label()} and {second.label()} cross at {witness}"
        )


class ClusterSizeError(InvalidInputError):
    """Pairwise non-crossing collection with the wrong member count."""


class FrozenSubsetError(PlabicError):
    """Mutation requested at an interval (frozen) position."""


class NotMutableError(PlabicError):
    """No exchange quadruple exists at the requested position."""


class AmbiguousMutationError(PlabicError):
    """Two distinct replacements satisfy the exchange condition."""


class NotQuadrivalentError(PlabicError):
    """Quiver mutation requested at a vertex without 2 in- and 2 out-arrows."""


class OrientationConflictError(PlabicError):
    """White and black cliques induce opposite orientations on one edge."""


class TilingError(PlabicError):
    """Arc collection fails the required tiling or non-crossing structure."""


class SaturationStallError(PlabicError):
    """Relation propagation stopped with coordinates still unknown."""

    def __init__(self, unknown):
        self.unknown = tuple(sorted(unknown))
        super().__init__(f"saturation stalled with {len(self.unknown)} unknowns")


class SolveValueError(PlabicError):
    """A solved coordinate is non-positive or non-integral."""


class FriezeBuildError(PlabicError):
    """Frieze growth produced a non-positive/non-integral entry or a bad border."""


class EnumerationGuardError(PlabicError):
    """Requested enumeration exceeds the desk-scale guard."""
