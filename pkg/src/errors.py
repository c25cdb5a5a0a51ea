"""
Exception hierarchy for the diagrammatic-set toolkit

Every error raised by the library derives from DiagramError and carries an
optional ``locus`` (element ids, an interval, or an (x, n, sign) triple) so
that the CLI can report failures in a machine-readable form.
"""

from typing import Any, Dict, Optional


class DiagramError(Exception):
    """Base class for all library errors"""

    def __init__(self, message: str = "", locus: Optional[Any] = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.locus = locus

    def to_dict(self) -> Dict[str, Any]:
        """
        Machine-readable form of the error

        Returns:
            Dictionary with error class name, message and locus
        """
        locus = self.locus
        if isinstance(locus, (set, frozenset)):
            locus = sorted(str(item) for item in locus)
        elif isinstance(locus, tuple):
            locus = [str(item) for item in locus]
        elif locus is not None and not isinstance(locus, (str, int, list, dict)):
            locus = str(locus)
        return {'error': self.__class__.__name__, 'message': self.message, 'locus': locus}


# ============ Oriented graded posets ============

class OgposetError(DiagramError):
    pass


class NotGraded(OgposetError):
    pass


class CyclicCovers(OgposetError):
    pass


class DuplicateEdge(OgposetError):
    pass


class DuplicateElement(OgposetError):
    pass


class TransitiveEdge(OgposetError):
    pass


class DimMismatch(OgposetError):
    pass


class UnknownIndex(OgposetError):
    pass


class HostMismatch(OgposetError):
    pass


# ============ Molecules ============

class MoleculeError(DiagramError):
    pass


class NotAMolecule(MoleculeError):
    pass


class NoLayering(MoleculeError):
    pass


class NotSpherical(MoleculeError):
    pass


class Indeterminate(MoleculeError):
    """A bounded search ran out of budget before reaching a verdict"""
    pass


class BoundaryMismatch(MoleculeError):
    pass


class NotSubmolecule(MoleculeError):
    pass


# ============ Maps ============

class MapError(DiagramError):
    pass


class NotAMap(MapError):
    pass


class SizeLimit(MapError):
    pass


class NotUnique(MapError):
    pass


class OrientationConflict(MapError):
    pass


class PreconditionFailed(MapError):
    pass


# ============ Constructions ============

class ConstructionError(DiagramError):
    pass


class Unsupported(ConstructionError):
    pass


class QuotientInvalid(ConstructionError):
    pass


class IndexOutOfRange(ConstructionError):
    pass


class NotAnAtom(ConstructionError):
    pass


# ============ Documents ============

class CodecError(DiagramError):
    pass


class ParseError(CodecError):
    pass


class ValidationError(CodecError):
    """A well-formed document that does not describe a valid structure"""

    def __init__(self, message: str = "", locus: Optional[Any] = None, reason: Optional[str] = None):
        super().__init__(message, locus)
        self.reason = reason

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result['reason'] = self.reason
        return result


# ============ Internal laws ============

class InvariantViolation(DiagramError):
    """A law asserted by the library itself failed"""
    pass
