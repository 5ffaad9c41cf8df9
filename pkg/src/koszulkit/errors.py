"""Exception hierarchy.

Every error raised on bad input derives from :class:`KoszulkitError`, so the
command line front end can map the whole family onto exit status 2.
"""


class KoszulkitError(Exception):
    pass


class MalformedPosetError(KoszulkitError, ValueError):
    pass


class UnknownElementError(KoszulkitError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IncomparableError(KoszulkitError, ValueError):
    pass


class NotGradedError(KoszulkitError, ValueError):
    """Raised by homological entry points when handed a non-graded poset."""

    def __init__(self, witness, message=None):
        self.witness = witness
        if message is None:
            x, y, lengths = witness
            message = "poset is not graded: interval [%s,%s] has maximal chains of lengths %s" % (
                x, y, ", ".join(map(str, lengths)))
        super().__init__(message)


class InvalidFrontierError(KoszulkitError, ValueError):
    pass


class InvalidTargetError(KoszulkitError, ValueError):
    pass


class InvalidGeneratorError(KoszulkitError, ValueError):
    pass


class ShapeError(KoszulkitError, ValueError):
    pass


class InvalidParameterError(KoszulkitError, ValueError):
    pass


class BuildError(KoszulkitError):
    """Base class for a rejected construction step."""


class NameCollisionError(BuildError, ValueError):
    pass


class DaggerViolationError(BuildError, ValueError):
    """The frontier fails condition (dagger), or (double dagger) when ``dual`` is set."""

    def __init__(self, check, frontier, dual=False):
        self.check = check
        self.frontier = tuple(frontier)
        self.dual = dual
        name = "ddagger" if dual else "dagger"
        where = ""
        if check.pair is not None:
            where = " at pair (%s, %s)" % check.pair
        super().__init__("%s-violation: frontier {%s} fails with %s%s" % (
            name, ", ".join(self.frontier), check.failure_reason, where))


class GradednessViolationError(BuildError, ValueError):
    def __init__(self, witness):
        self.witness = witness
        x, y, lengths = witness
        super().__init__("gradedness-violation: interval [%s,%s] has maximal chains of lengths %s" % (
            x, y, ", ".join(map(str, lengths))))
