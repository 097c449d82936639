"""Exception hierarchy.

The three intermediate classes map onto CLI exit codes: parse/input errors
(2), classification errors (3) and internal-consistency failures (4).
"""


class RelpolyError(Exception):
    """Base class for every error raised by this package."""


class InputError(RelpolyError, ValueError):
    exit_code = 2


class ClassificationError(RelpolyError):
    exit_code = 3


class ConsistencyError(RelpolyError):
    exit_code = 4


# words
class UnknownLetter(InputError):
    pass


class MalformedExponent(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class SyllableFormUnavailable(InputError):
    pass


# geometry
class EmptyInput(InputError):
    pass


class NotPrimitive(InputError):
    pass


class DifferenceDoesNotExist(ConsistencyError):
    pass


class MarkingInconsistent(ConsistencyError):
    pass


# pipeline
class EmptyRelator(InputError):
    pass


class NotEpimorphism(InputError):
    pass


class NotNice(ClassificationError):
    pass


class NotSimple(ClassificationError):
    pass


class PowerOfGenerator(ClassificationError):
    pass


class BaumslagSolitarExcluded(ClassificationError):
    pass


class RouteMismatch(ConsistencyError):
    pass
