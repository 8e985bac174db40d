class SkeinError(Exception):
    """Base class for every error raised by the skein engine."""


class ParseError(SkeinError, ValueError):
    """A literal (partition, braid word, matching, expression) could not be read."""

    def __init__(self, message, text='', position=0):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position

    def annotated(self):
        """Message with the offending text and a caret under the failing position."""
        if not self.text:
            return f"{self.message} (at position {self.position})"
        return f"{self.message} (at position {self.position})\n  {self.text}\n  {' ' * self.position}^"

    def __str__(self):
        return f"{self.message} (at position {self.position})"


class StrandMismatchError(SkeinError, ValueError):
    pass


class EnumerationLimitError(SkeinError):
    pass


class SpecializationError(SkeinError, ArithmeticError):
    pass


class PoleError(SpecializationError):
    def __init__(self, order):
        super().__init__(f"Denominator vanishes to order {order} at h=0")
        self.order = order


class PatternError(SkeinError, ValueError):
    pass
