"""Exception hierarchy shared by every fracfrob module."""


class FracFrobError(Exception):
    pass


class IncompatibleSeries(FracFrobError, ValueError):
    """Series differ in expansion point, order alpha, or sit on different base lattices."""


class ZeroLeadingCoefficient(FracFrobError, ZeroDivisionError):
    pass


class NonPositiveLeadingPower(FracFrobError, ValueError):
    pass


class DomainError(FracFrobError, ValueError):
    """Evaluation requested at or to the left of the expansion point."""


class ComplexRoots(FracFrobError, ValueError):
    pass


class Resonance(FracFrobError, ArithmeticError):
    def __init__(self, k, value=None):
        self.k = k
        self.value = value
        super().__init__(f"indicial polynomial vanishes at shift k={k}"
                         + ("" if value is None else f" (I0 = {value!r})"))


class InvalidRadius(FracFrobError, ValueError):
    pass


class DegenerateWronskian(FracFrobError, ArithmeticError):
    pass


class ParseError(FracFrobError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ValidationError(FracFrobError, ValueError):
    pass
