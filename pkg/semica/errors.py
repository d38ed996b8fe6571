"""
Exceptions raised by semica.

Every error a job can hit maps to one of two exit codes in the CLI:
invalid input (1) or an exhausted enumeration budget (2).
"""
from __future__ import annotations


class SemicaError(Exception):
    pass


class InvalidInputError(SemicaError, ValueError):
    """An element, table, rule or parameter that violates its contract"""

    def __init__(self, msg: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{', '.join(where)}: {msg}" if where else msg)


class SpecSyntaxError(InvalidInputError):
    pass


class BudgetExceededError(SemicaError):
    """Enumeration would exceed the configured budget.

    `required` is the number of assignments (or elements) the operation needs,
    `exponent` the size of the enumerated window when that applies.
    """

    def __init__(self, required: int, budget: int, exponent: int | None = None):
        self.required = required
        self.budget = budget
        self.exponent = exponent
        detail = f" (exponent {exponent})" if exponent is not None else ""
        super().__init__(f"needs {required} > budget {budget}{detail}")


class NoFolnerSequenceError(SemicaError):
    pass


class InsufficientWindowError(SemicaError):
    pass
