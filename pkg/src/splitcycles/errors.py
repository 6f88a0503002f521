"""Exception types shared across the toolkit.

Every error carries an ``exit_code`` so the command line front end can map
failures onto its stable contract (2 = bad input, 3 = resource cap).
"""


class SplitCyclesError(Exception):
    exit_code = 1


class InputError(SplitCyclesError, ValueError):
    exit_code = 2


class GraphParseError(InputError):
    pass


class LoopError(GraphParseError):
    pass


class UnknownVertexError(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleError(InputError):
    """The vertex sequence is not an induced chordless cycle of length >= 4."""


class NotACycleError(CycleError):
    pass


class ChordError(CycleError):
    def __init__(self, message, chord=None):
        super().__init__(message)
        self.chord = chord


class CycleTooShortError(CycleError):
    pass


class MonomialParseError(InputError):
    pass


class SplittingError(InputError):
    pass


class HypothesisViolated(SplittingError):
    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class AmbiguousAssignment(SplittingError):
    pass


class ZeroIdealError(SplittingError):
    pass


class NoCandidatesError(SplittingError):
    pass


class CapExceeded(SplitCyclesError):
    exit_code = 3


class DuplicateEdgeWarning(UserWarning):
    code = "duplicate-edge"
