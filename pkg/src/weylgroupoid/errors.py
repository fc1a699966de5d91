"""Exception hierarchy shared by all modules."""


class WeylGroupoidError(Exception):
    """Base class for every library error."""


class SingularBasis(WeylGroupoidError):
    pass


class EmptyInput(WeylGroupoidError):
    pass


class ParallelRoots(WeylGroupoidError):
    def __init__(self, i, j):
        super().__init__(f"positive roots {i} and {j} are parallel")
        self.i = i
        self.j = j


class NotSpanning(WeylGroupoidError):
    pass


class EmptyChamber(WeylGroupoidError):
    pass


class NotSimplicial(WeylGroupoidError):
    """Raised when a chamber is not an open simplicial cone.

    ``chamber`` is the sign string of the offending chamber and
    ``walls`` the root indices of its walls.
    """

    def __init__(self, chamber, walls):
        super().__init__(
            f"chamber {chamber} has {len(walls)} walls {sorted(k + 1 for k in walls)}; not simplicial"
        )
        self.chamber = chamber
        self.walls = walls


class PosConeViolation(WeylGroupoidError):
    pass


class IntegralityViolation(WeylGroupoidError):
    pass


class UnsupportedRank(WeylGroupoidError):
    pass
