"""Exception hierarchy shared by every stage of the toolchain."""


class RecError(Exception):
    pass


# -- syntax -----------------------------------------------------------------

class RecSyntaxError(RecError, ValueError):
    pass


class UnbalancedParens(RecSyntaxError):
    pass


class DanglingCompound(RecSyntaxError):
    pass


class ReservedLetter(RecSyntaxError):
    pass


class UnknownToken(RecSyntaxError):
    pass


class TableError(RecSyntaxError):
    """Malformed or inconsistent symbol table."""


class RegexSyntaxError(RecSyntaxError):
    pass


class UnbalancedBrackets(RegexSyntaxError):
    pass


class EmptyOperand(RegexSyntaxError):
    pass


class AsmSyntaxError(RecSyntaxError):
    pass


# -- execution --------------------------------------------------------------

class RecRuntimeError(RecError):
    """Raised while executing a program.

    ``trace`` is filled in by the executor with the events recorded up to
    the failure, so callers can still compare partial behaviour.
    """

    trace = None


class StepBudgetExceeded(RecRuntimeError):
    pass


class InputExhausted(RecRuntimeError):
    pass


class EmptyWorkspace(RecRuntimeError):
    pass


class UnboundSymbol(RecRuntimeError):
    pass


class ScriptExhausted(RecRuntimeError):
    pass


class UndefinedLabel(RecRuntimeError):
    pass


class MachineFault(RecRuntimeError):
    """The emulated machine reached a word that is not an instruction."""


# -- code generation --------------------------------------------------------

class NameCollision(RecError, ValueError):
    pass
