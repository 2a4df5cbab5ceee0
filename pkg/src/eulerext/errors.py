"""Exception types shared by the solver modules.

Subclasses of :class:`ExtensionError` mean the requested extension could not
be produced; the CLI maps them to exit code 2.
"""


class ExtensionError(Exception):
    kind = "extension-error"


class PreconditionError(ExtensionError, ValueError):
    kind = "precondition"


class FeasibilityError(ExtensionError):
    kind = "infeasible-hypothesis"


class BudgetExhausted(ExtensionError):
    kind = "budget-exhausted"


class InfeasiblePlan(ExtensionError):
    kind = "infeasible-plan"


class RetriesExhausted(ExtensionError):
    kind = "retries-exhausted"

    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = dict(failures or {})


class DegreeOverflow(ExtensionError):
    kind = "degree-overflow"


class NotEulerian(ExtensionError):
    kind = "not-eulerian"


class NoCandidate(Exception):
    """No replacement vertex satisfies the repair constraints; resample."""


class DegreeBudgetExceeded(NoCandidate):
    """Degree in the accumulated multigraph reached n/2 - 5 before a repair."""
