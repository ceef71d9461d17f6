"""
Exceptions raised by the LanQ tool chain.

Language-level runtime errors (uninitialised variable, overlapping quantum
arguments, incompatibly structured quantum assignment) are not exceptions; they
are terms left on a process's term stack. Everything here is a failure of the
tool chain or of the program text itself.
"""


class LanQError(Exception):
    """Base class for every error raised by the lanq package."""
    rule = None

    def __init__(self, message, span=None, rule=None):
        super().__init__(message)
        self.message = message
        self.span = span
        if rule is not None:
            self.rule = rule

    def render(self, path='<input>'):
        """
        Render the error as a single diagnostic line.

        Args:
            path: The file name to prefix the diagnostic with.

        Returns:
            A string formatted as ``file:line:col: rule-name: message``.
        """
        line, column = (self.span.line, self.span.column) if self.span is not None else (0, 0)
        rule = self.rule if self.rule is not None else type(self).__name__
        return f"{path}:{line}:{column}: {rule}: {self.message}"


class LexError(LanQError):
    rule = 'lex'


class ParseError(LanQError):
    rule = 'parse'

    def __init__(self, message, span=None, expected=()):
        super().__init__(message, span)
        self.expected = frozenset(expected)


class LoweringError(LanQError):
    rule = 'lower'


class DuplicateMethod(LoweringError):
    def __init__(self, name, span=None):
        super().__init__(f"Method '{name}' is defined more than once.", span)
        self.name = name


class ReservedName(LoweringError):
    def __init__(self, name, span=None):
        super().__init__(f"Method '{name}' shadows a builtin of the same name.", span)
        self.name = name


class LanQTypeError(LanQError):
    """A static typing failure, tagged with the typing rule that did not apply."""
    def __init__(self, message, span=None, rule=None, method=None):
        super().__init__(message, span, rule)
        self.method = method

    def render(self, path='<input>'):
        text = super().render(path)
        return text if self.method is None else f"{text} (in method '{self.method}')"


class ConfigTypeError(LanQError):
    """A configuration could not be typed; rule names the first inapplicable rule."""
    pass


class NoMain(LanQError):
    rule = 'start'

    def __init__(self):
        super().__init__("The program has no method called 'main'.")


class DimensionMismatch(LanQError):
    rule = 'quantum'


class EvaluationStuck(LanQError):
    """No rule applies to a non-terminal configuration and nothing waits on a channel."""
    rule = 'stuck'


class StepLimitExceeded(LanQError):
    rule = 'limit'


class DeadlockDetected(LanQError):
    rule = 'deadlock'
