"""Exception types shared by every module.

Each exception carries a short machine-readable ``code`` that the CLI
reports in its ``error`` object.
"""


class SubresError(ValueError):
    code = "error"


class ParseError(SubresError):
    code = "parse_error"


class BasisError(SubresError):
    code = "invalid_basis"


class BasisMismatchError(SubresError):
    code = "basis_mismatch"


class DegreeError(SubresError):
    code = "degree_order"


class ShapeError(SubresError):
    code = "shape_error"


class RootsError(SubresError):
    code = "repeated_roots"


class ZeroDivisorError(SubresError, ZeroDivisionError):
    code = "zero_divisor"
