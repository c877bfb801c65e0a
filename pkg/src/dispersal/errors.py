"""Exception hierarchy shared by the library and the CLI."""


class DispersalError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(DispersalError, ValueError):
    """Invalid arguments or malformed input data."""

    exit_code = 2


class ConnectivityError(InputError):
    """An operation that needs a connected graph received a disconnected one."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


class PreconditionError(InputError):
    """A mathematical precondition of a construction does not hold."""


class BudgetExceeded(DispersalError):
    """The exact search ran out of its time budget before deciding."""

    exit_code = 3


class InvariantViolation(DispersalError, AssertionError):
    """An internal consistency check failed (a bug, never a user error)."""

    exit_code = 4
