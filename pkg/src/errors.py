"""Domain errors that carry diagnostics back to the caller."""


class InadmissibleTorusError(ValueError):
    """The torus (n, m) does not close: row m propagated once more differs from row 0."""

    def __init__(self, n, m, boundary, closure_row):
        self.n = n
        self.m = m
        self.boundary = tuple(int(v) for v in boundary)
        self.closure_row = tuple(int(v) for v in closure_row)
        super().__init__(
            f"torus ({n},{m}) is not admissible: boundary {self.boundary} "
            f"returns {self.closure_row} after {m} steps"
        )


class SingularMatrixError(ArithmeticError):
    """Matrix has no multiplicative order over GF(3)."""


class EnumerationLimitError(ValueError):
    def __init__(self, what, value, limit, hint):
        self.what = what
        self.value = value
        self.limit = limit
        self.hint = hint
        super().__init__(f"{what}={value} exceeds the guard {limit}; {hint}")


class SubspaceLeakageError(ValueError):
    def __init__(self, leakage):
        self.leakage = float(leakage)
        super().__init__(f"operator leaks out of the restricted subspace (norm {self.leakage:.3e})")
