"""Exception hierarchy shared by every module of the package."""


class LabError(Exception):
    """Base class for all errors raised by lefschetz_lab."""


class NotAFace(LabError):
    pass


class VertexClash(LabError):
    pass


class FaceTooSmall(LabError):
    pass


class BadParameters(LabError):
    pass


class BadPrime(LabError):
    pass


class UnboundedSupport(LabError):
    pass


class NotArtinian(LabError):
    pass


class DegreeOutOfRange(LabError):
    pass


class NotGorensteinShaped(LabError):
    pass


class NotGorensteinStar(LabError):
    pass


class NotArtinianSeed(LabError):
    pass


class BadT(LabError):
    pass


class BadSpec(LabError):
    pass
