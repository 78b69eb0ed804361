"""Exception hierarchy shared by every subsystem."""


class ProjflipError(Exception):
    """Base class for all domain errors."""


# -- exact projective primitives ------------------------------------------

class ZeroVector(ProjflipError):
    pass


class CoincidentPoints(ProjflipError):
    pass


class CoincidentLines(ProjflipError):
    pass


# -- arrangements ---------------------------------------------------------

class TooFewLines(ProjflipError):
    pass


class NotGeneric(ProjflipError):
    def __init__(self, message, coincident_pairs=(), concurrent_triples=()):
        super().__init__(message)
        self.coincident_pairs = list(coincident_pairs)
        self.concurrent_triples = list(concurrent_triples)


class NotBipartite(ProjflipError):
    pass


# -- coherence ------------------------------------------------------------

class IncidentInput(ProjflipError):
    pass


class MissingAssignment(ProjflipError):
    pass


class SeedingFailed(ProjflipError):
    pass


# -- Desargues flips ------------------------------------------------------

class DegenerateSite(ProjflipError):
    pass


class SideLinesCoincide(ProjflipError):
    pass


class NotAFlipSite(ProjflipError):
    pass


class IncoherentResult(ProjflipError):
    pass


# -- flip words -----------------------------------------------------------

class InapplicableEvent(ProjflipError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class OverlappingSupports(ProjflipError):
    pass


class NotAnOctogonPattern(ProjflipError):
    pass


# -- motion ---------------------------------------------------------------

class IdenticallyZero(ProjflipError):
    pass


class SimultaneousEvents(ProjflipError):
    pass


class QuadruplePoint(ProjflipError):
    pass


class BreakpointEvent(ProjflipError):
    pass


# -- rendering / CLI ------------------------------------------------------

class ChartDegenerate(ProjflipError):
    pass


class UsageError(ProjflipError):
    pass
