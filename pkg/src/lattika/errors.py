"""Exception hierarchy shared by every lattika module."""


class LattikaError(Exception):
    """Base class for all lattika errors."""


class LatticeError(LattikaError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        super().__init__(f"elements {pair[0]!r} and {pair[1]!r} have no unique {kind}")


class NoBoundedStructure(LatticeError):
    pass


class DegenerateLattice(LatticeError):
    """Raised when a lattice would have 0 = 1."""


class CycleDetected(LatticeError):
    pass


class NotComparable(LatticeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"{a!r} is not below {b!r}")


class ContainsTop(LatticeError):
    pass


class NotModular(LatticeError):
    pass


class GaloisError(LattikaError):
    pass


class NotMonotone(GaloisError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"map is not order-preserving at {pair[0]!r} <= {pair[1]!r}")


class NotAdjoint(GaloisError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"adjunction fails at a={pair[0]!r}, b={pair[1]!r}")


class HypothesesNotMet(GaloisError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__("hypotheses not met: " + ", ".join(self.missing))


class CoclosureNotUnique(GaloisError):
    def __init__(self, element, coclosures):
        self.element = element
        self.coclosures = coclosures
        super().__init__(f"{element!r} has coclosures {sorted(coclosures)!r}, expected exactly one")


class NoIsomorphism(LattikaError):
    pass


class TooLarge(LattikaError):
    pass


class RingMismatch(LattikaError):
    pass


class PreconditionFailed(LattikaError):
    def __init__(self, which):
        self.which = which
        super().__init__(f"precondition failed: {which}")


class SpecError(LattikaError):
    """A group, module or fixture specification could not be parsed."""
