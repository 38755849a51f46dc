"""
This file contains all the exceptions that are to be used across the library and the cli
"""


class ValidationException(Exception):
    """
    This exception is raised whenever user supplied input (flags, files, parameters) is not acceptable.
    The cli maps it to exit code 2.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0002"
        self.message = message or "Validation Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class ResourceNotFoundException(Exception):
    """
    Raised when a required input is not available, e.g. a Q polynomial for k >= 6
    without a user supplied file, or a missing golden data file.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0004"
        self.message = message or "Resource Not Found Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class DimensionMismatchException(Exception):
    """
    Raised when objects that must share a variable count or jet dimension do not.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0005"
        self.message = message or "Dimension Mismatch Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class MalformedFormException(Exception):
    """
    Raised for a linear form with all z-coefficients zero, or with a leading
    coefficient that cannot be inverted in the coefficient domain.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0006"
        self.message = message or "Malformed Linear Form Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class TruncationOverflowException(Exception):
    """
    Raised when a truncation window cannot hold an exponent range the computation needs.
    Never swallowed: a silent truncation would give wrong coefficients.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0007"
        self.message = message or "Truncation Overflow Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class StabilityException(Exception):
    """
    Raised by the residue self-check when enlarging every window changes the result.
    """

    def __init__(self, error_code=None, description=None, message=None):
        self.error_code = error_code or "0008"
        self.message = message or "Residue Stability Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)


class InvalidStateException(Exception):
    """
    use this exception whenever an identity that must hold by construction fails.
    we treat this as a computation bug, never as a verification FAIL.
    """

    def __init__(self, description=None, message=None):
        self.error_code = 500
        self.message = message or "Invalid State Exception"
        self.description = description

    def __str__(self):
        return "Error Message: %s" % (self.message)
