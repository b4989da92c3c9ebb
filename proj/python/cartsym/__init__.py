"""Cartesian symmetry classes: dimensions, Gram data and O-basis search."""

try:
    from . import _cartsym
except ImportError:  # in-tree build: the extension sits next to the build outputs
    import _cartsym

Permutation = _cartsym.Permutation
ParseError = _cartsym.ParseError
DomainError = _cartsym.DomainError
InvariantViolation = _cartsym.InvariantViolation

group_info = _cartsym.group_info
mobius = _cartsym.mobius
totient = _cartsym.totient
ramanujan = _cartsym.ramanujan
two_part = _cartsym.two_part
dihedral_criterion = _cartsym.dihedral_criterion
dims = _cartsym.dims
gram = _cartsym.gram
obasis = _cartsym.obasis
table = _cartsym.table
verify = _cartsym.verify

__all__ = [
    "Permutation",
    "ParseError",
    "DomainError",
    "InvariantViolation",
    "group_info",
    "mobius",
    "totient",
    "ramanujan",
    "two_part",
    "dihedral_criterion",
    "dims",
    "gram",
    "obasis",
    "table",
    "verify",
]
