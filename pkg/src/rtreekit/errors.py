"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
1 for malformed input, 2 for domain errors (bad query arguments, inputs that
are well formed but outside an operation's domain).
"""


class RTreeError(ValueError):
    exit_code = 1


class InputError(RTreeError):
    """Malformed text input."""


class DomainError(RTreeError):
    exit_code = 2


# tree-core
class CycleDetected(RTreeError):
    pass


class Disconnected(RTreeError):
    pass


class BadRoot(RTreeError):
    pass


class BadVertex(DomainError):
    pass


class NoLeastElement(RTreeError):
    pass


class DownSetNotChain(RTreeError):
    def __init__(self, a, b, c):
        super().__init__(
            f"down-set of {c!r} is not a chain: {a!r} and {b!r} are incomparable"
        )
        self.triple = (a, b, c)


# excursion-codec
class BadEndpoint(RTreeError):
    pass


class BadStep(RTreeError):
    def __init__(self, index: int):
        super().__init__(f"step at index {index} is not +1 or -1")
        self.index = index


class NegativeHeight(RTreeError):
    def __init__(self, index: int):
        super().__init__(f"negative height at index {index}")
        self.index = index


class IndexOutOfRange(DomainError):
    pass


# metric-index
class NotAMetric(DomainError):
    def __init__(self, reason: str):
        super().__init__(f"not a metric: {reason}")
        self.reason = reason


# contour
class LevelAboveX(DomainError):
    pass


class DisconnectedGraph(RTreeError):
    pass


class LevelNotRealized(DomainError):
    def __init__(self, level, below, above):
        super().__init__(
            f"no ancestor class at level {level}; nearest levels are {below} and {above}"
        )
        self.level = level
        self.below = below
        self.above = above


# path-forest
class BadPathId(DomainError):
    pass
