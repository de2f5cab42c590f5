# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The jetforms developers
#
# jetforms is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# jetforms is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with jetforms; if not, see <http://www.gnu.org/licenses/>
#
'''
-----------------
Problem file tree
-----------------

The parser produces these frozen dataclasses.  Source positions are kept
for diagnostics but take no part in comparisons, so two trees compare
equal when they have the same structure.

An index is either an :class:`int` (a literal) or a :class:`str` (an index
variable bound by a ``sum`` binder, a ``let`` header or an ``alpha``
declaration).
'''
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import sympy as sp

Index = Union[int, str]

def _position():
    return field(default=0, compare=False, repr=False)

#
# Expressions
#

@dataclass(frozen=True)
class Number:
    value: sp.Rational
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Name:
    '''A declared identifier with its component indices, ``eta[i,j]``'''
    name: str
    indices: Tuple[Index, ...] = ()
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Derivative:
    '''``D(field, i, j, ...)``; :attr:`target` names a field component'''
    target: Name
    indices: Tuple[Index, ...]
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Binder:
    '''An index variable; :attr:`size` of :data:`None` means the base
    dimension'''
    name: str
    size: Optional[int] = None
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Sum:
    binders: Tuple[Binder, ...]
    body: 'Expr'
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Neg:
    operand: 'Expr'
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'Expr'
    right: 'Expr'
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class Power:
    base: 'Expr'
    exponent: int
    line: int = _position()
    column: int = _position()

Expr = Union[Number, Name, Derivative, Sum, Neg, BinOp, Power]

#
# Declarations
#

@dataclass(frozen=True)
class FieldDecl:
    '''A scalar field (empty :attr:`shape`) or a field family'''
    name: str
    shape: Tuple[int, ...] = ()
    symmetric: bool = False
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class ChartDecl:
    base: Tuple[str, ...]
    fields: Tuple[FieldDecl, ...]
    order: int
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class ConstantDecl:
    '''A constant tensor; :attr:`value` is a :class:`sympy.Rational` or
    nested tuples of them, row major'''
    name: str
    value: object
    line: int = _position()
    column: int = _position()

    @property
    def shape(self):
        return constant_shape(self.value)

@dataclass(frozen=True)
class OpaqueDecl:
    '''``name = inverse(family)`` or ``name = sqrtabsdet(family)``'''
    name: str
    kind: str
    family: str
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class LetDecl:
    name: str
    params: Tuple[Binder, ...]
    body: Expr
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class ReducedDecl:
    '''The reduced Lagrangian and the components of ``alpha``

    :attr:`index` is the binder of ``alpha[i] := ...``; it ranges over the
    base.
    '''
    lagrangian: Expr
    index: Binder
    alpha: Expr
    line: int = _position()
    column: int = _position()

@dataclass(frozen=True)
class ProblemFile:
    chart: ChartDecl
    constants: Tuple[ConstantDecl, ...] = ()
    params: Tuple[str, ...] = ()
    opaque: Tuple[OpaqueDecl, ...] = ()
    lets: Tuple[LetDecl, ...] = ()
    lagrangian: Optional[Expr] = None
    reduced: Optional[ReducedDecl] = None

def constant_shape(value):
    '''Shape of a constant value; ``()`` for a scalar'''
    shape = []
    while isinstance(value, tuple):
        shape.append(len(value))
        value = value[0]
    return tuple(shape)

__all__ = ('BinOp', 'Binder', 'ChartDecl', 'ConstantDecl', 'Derivative',
        'Expr', 'FieldDecl', 'Index', 'LetDecl', 'Name', 'Neg', 'Number',
        'OpaqueDecl', 'Power', 'ProblemFile', 'ReducedDecl', 'Sum',
        'constant_shape')
