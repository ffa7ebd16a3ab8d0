"""Exception types shared across the package."""


class SolverFailure(RuntimeError):
    """A root solve failed to bracket or converge.

    Carries enough state to reproduce the failed solve.
    """

    def __init__(self, message, **state):
        super().__init__(message)
        self.state = dict(state)

    def __str__(self):
        base = super().__str__()
        if self.state:
            extra = ", ".join(f"{k}={v!r}" for k, v in sorted(self.state.items()))
            return f"{base} ({extra})"
        return base


class CompletenessError(RuntimeError):
    """An enumeration could not be certified complete below its cutoff."""


class ContradictionError(RuntimeError):
    """Numerical evidence contradicts a proved invariant.

    This is deliberately loud: it should abort the computation rather than be
    silently swallowed, because it means either a bug or a wrong assumption.
    """

    def __init__(self, message, **evidence):
        super().__init__(message)
        self.evidence = dict(evidence)


class CertificationError(RuntimeError):
    """A count failed to certify at the maximum allowed resolution."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
