"""Exception hierarchy. Everything raised on bad input derives from CosplitError."""


class CosplitError(Exception):
    pass


class DimensionMismatch(CosplitError, ValueError):
    pass


class SingularMatrix(CosplitError, ValueError):
    pass


class NotInSpan(CosplitError, ValueError):
    """A matrix or tensor lies outside the span of the basis it was expressed in."""


class NotALieAlgebra(CosplitError, ValueError):
    pass


class NotALieCoalgebra(CosplitError, ValueError):
    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class OwnerMismatch(CosplitError, ValueError):
    pass


class DegenerateForm(CosplitError, ValueError):
    pass


class NotCoSplitError(CosplitError, ValueError):
    pass


class NotScalar(CosplitError, ValueError):
    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class InvalidRank(CosplitError, ValueError):
    pass


class UnsupportedRealization(CosplitError, ValueError):
    pass
