"""Exception hierarchy shared by all modules."""


class MFSError(Exception):
    """Base class for every error raised by :mod:`mfspectra`."""


class InvalidRank(MFSError, ValueError):
    pass


class LatticeMismatch(MFSError, ValueError):
    pass


class NotDominant(MFSError, ValueError):
    pass


class SizeLimit(MFSError, RuntimeError):
    pass


class NegativeMultiplicity(MFSError, ValueError):
    """Peeling produced a negative coefficient: the map is not a restriction."""


class ParityMismatch(MFSError, ValueError):
    pass


class TooManyRows(MFSError, ValueError):
    pass


class InvalidChain(MFSError, ValueError):
    pass


class MultiplicityViolation(MFSError, RuntimeError):
    """A restriction multiplicity above one was observed on a pair expected to be MF."""


class UnsupportedPair(MFSError, ValueError):
    pass


class NotInWell(MFSError, ValueError):
    pass


class InvalidBottom(MFSError, ValueError):
    pass


class SliceTooSmall(MFSError, ValueError):
    pass


class BadIndex(MFSError, IndexError):
    pass


class InconsistentData(MFSError, ValueError):
    pass
