"""Exception taxonomy shared by every module.

Each error carries a machine-readable ``code`` so the command line front end
can map it to an exit status without string matching.
"""


class GTError(Exception):
    code = "error"
    # exit status used by the CLI
    exit_code = 2

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class ValidationError(GTError):
    code = "validation_error"


class InvalidPartition(ValidationError):
    code = "invalid_partition"


class InvalidContent(ValidationError):
    code = "invalid_content"


class ContentMismatch(ValidationError):
    code = "content_mismatch"


class InterlacingViolation(ValidationError):
    code = "interlacing_violation"

    def __init__(self, i: int, j: int, message: str = ""):
        super().__init__(message or f"interlacing fails at x[{i},{j}]", i=i, j=j)
        self.i = i
        self.j = j


class MalformedPattern(ValidationError):
    code = "malformed_pattern"


class SizeMismatch(ValidationError):
    code = "size_mismatch"


class RowNotWeaklyIncreasing(ValidationError):
    code = "row_not_weakly_increasing"

    def __init__(self, r: int, message: str = ""):
        super().__init__(message or f"row {r} is not weakly increasing", r=r)
        self.r = r


class ColumnNotStrictlyIncreasing(ValidationError):
    code = "column_not_strictly_increasing"

    def __init__(self, c: int, message: str = ""):
        super().__init__(message or f"column {c} is not strictly increasing", c=c)
        self.c = c


class NotAPartitionShape(ValidationError):
    code = "not_a_partition_shape"


class EntryOutOfRange(ValidationError):
    code = "entry_out_of_range"


class IndexOutOfRange(ValidationError):
    code = "index_out_of_range"


class NotIncreasing(ValidationError):
    code = "not_increasing"


class NotInImage(ValidationError):
    code = "not_in_image"


class NotMember(ValidationError):
    code = "not_member"


class InvalidElement(ValidationError):
    code = "invalid_element"


class InvalidK(ValidationError):
    code = "invalid_k"


class InsufficientDilates(ValidationError):
    code = "insufficient_dilates"


class EmptyPolytope(GTError):
    code = "empty_polytope"
    exit_code = 3


class TooLarge(GTError):
    code = "too_large"
    exit_code = 4


class NonpolynomialResidue(GTError):
    """Dilate counts disagree with the period/dimension used to fit them."""

    code = "nonpolynomial_residue"
    exit_code = 1


class InternalInconsistency(GTError):
    code = "internal_inconsistency"
    exit_code = 1
