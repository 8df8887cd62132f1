"""Exception hierarchy shared by all modules.

``InputError`` covers anything the caller got wrong (malformed spec, bad
field parameters, mismatched dimensions).  ``ComputationError`` signals a
broken internal invariant; the CLI maps it to exit status 2.
"""


class InputError(ValueError):
    pass


class FieldError(InputError):
    pass


class CapExceededError(InputError):
    pass


class PSingularError(InputError):
    """Raised when a Brauer-lifted quantity is requested for an element whose
    order is divisible by the characteristic."""


class PoleError(ArithmeticError):
    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"pole of order {order}")


class InconclusiveError(RuntimeError):
    pass


class ComputationError(RuntimeError):
    pass
