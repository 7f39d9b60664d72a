"""Exception hierarchy shared by every ringlab module."""


class RingError(Exception):
    """Base class for all ringlab errors."""


class BadShape(RingError):
    pass


class OrderIncompatible(RingError):
    def __init__(self, i, j):
        super().__init__(f"structure constant e{i + 1}*e{j + 1} is not killed by the generator orders")
        self.i, self.j = i, j


class NonAssociative(RingError):
    def __init__(self, triple):
        i, j, l = triple
        super().__init__(f"(e{i + 1}e{j + 1})e{l + 1} != e{i + 1}(e{j + 1}e{l + 1})")
        self.triple = triple


class GroupMismatch(RingError):
    pass


class TooLarge(RingError):
    pass


class UnsupportedParameter(RingError):
    pass


class BaseNotUnital(RingError):
    pass


class BadInterval(RingError):
    pass


class EmptyInput(RingError):
    pass


class NotIdempotent(RingError):
    def __init__(self, i, detail="not idempotent"):
        super().__init__(f"family member {i}: {detail}")
        self.i = i


class NotOrthogonal(RingError):
    def __init__(self, i, j):
        super().__init__(f"family members {i} and {j} are not orthogonal")
        self.i, self.j = i, j


class WitnessError(RingError):
    """A hypothesis of a constructive argument was refuted.

    The CLI maps every subclass to exit code 2.
    """


class OracleFailed(WitnessError):
    def __init__(self, element, detail=""):
        msg = f"oracle could not supply a unit for {element}"
        super().__init__(msg + (f" ({detail})" if detail else ""))
        self.element = element


class NotIdempotentInput(WitnessError):
    pass


class NotCommuting(WitnessError):
    pass


class NotRegularAt(WitnessError):
    def __init__(self, element):
        super().__init__(f"no s with r*s*r = r for r = {element}")
        self.element = element


class HypothesisFailed(WitnessError):
    pass


class ProofStepFailed(RingError):
    """An intermediate identity of a constructive argument did not hold."""


class RingFileSyntaxError(RingError):
    def __init__(self, line, column, message):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


class MissingProduct(RingError):
    def __init__(self, i, j):
        super().__init__(f"no product declared for e{i} e{j}")
        self.i, self.j = i, j


class ArityMismatch(RingError):
    pass


class Discontinuous(RingError):
    pass
