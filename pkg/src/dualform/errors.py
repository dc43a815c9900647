"""Exception hierarchy.

Every error carries a short kebab-case ``code`` which the script runner
prints in ``FAIL <code>: <message>`` lines.
"""

from __future__ import annotations


class FormError(Exception):
    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class ParentMismatchError(FormError):
    code = "parent-mismatch"


class ModelCapabilityError(FormError):
    code = "model-capability"


class PartialityError(ModelCapabilityError):
    """A canonical embedding or projection was requested where none exists."""


class NotNormalError(PartialityError):
    code = "not-normal"


class NotConormalError(PartialityError):
    code = "not-conormal"


class NotIdealError(NotNormalError):
    code = "not-an-ideal"


class NotIsomorphismError(FormError):
    code = "not-an-isomorphism"


class FactorizationError(FormError):
    """A morphism does not factor through the given embedding/projection."""

    code = "no-factorization"


class InvalidTableError(FormError):
    code = "invalid-table"


class InvalidRingError(FormError):
    code = "invalid-ring"


class InvalidSubobjectError(FormError):
    code = "invalid-subobject"


class NotAdditiveSubgroupError(InvalidSubobjectError):
    code = "not-an-additive-subgroup"


class InvalidMorphismError(FormError):
    code = "invalid-morphism"


class ZigzagError(FormError):
    code = "invalid-zigzag"


class NotInducibleError(FormError):
    code = "not-inducible"


class ConsistencyError(FormError):
    """Two routes that must agree by a theorem disagreed."""

    code = "internal-consistency"


class HypothesisError(FormError):
    code = "hypothesis-violation"


class NormalityViolationError(HypothesisError):
    code = "normality-violation"


class ScriptError(FormError):
    code = "syntax"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.code}: line {self.line}, column {self.column}: {self.message}"


class UndefinedNameError(ScriptError):
    code = "undefined-name"


class ArityError(ScriptError):
    code = "arity"
