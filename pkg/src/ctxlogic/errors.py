"""Exception hierarchy shared by the library, the script language and the CLI."""


class LogicError(ValueError):
    """Base class for invalid propositions, selectors and shapes."""


class EmptyError(LogicError):
    pass


class NegativeEntry(LogicError):
    pass


class NotNormalized(LogicError):
    pass


class ShapeMismatch(LogicError):
    pass


class RowOutOfRange(LogicError):
    pass


class NotDecomposable(LogicError):
    pass


class Infeasible(LogicError):
    pass


class OutOfRange(LogicError):
    pass


class NotPreserving(LogicError):
    pass
