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
------------------
Scalar expressions
------------------

:class:`ScalarExpr` is an exact scalar on a chart: a :mod:`sympy`
expression in the jet coordinates, the chart parameters, the atoms of the
chart's opaque symbols and the homotopy parameter ``t``, always held in
canonical form.  Two polynomial or rational expressions are equal exactly
when their canonical forms are::

    >>> chart = ChartSpec(['x'], ['y'])
    >>> e = ScalarExpr.from_string(chart, 'y**2')
    >>> e.total_derivative(0)
    ScalarExpr(2*y*y__0)
    >>> e.fiber_scale().integrate_t01()
    ScalarExpr(y**2/3)

The module level functions are the same operations in function form.
'''
import sympy as sp

from jetforms import _
from jetforms.jetcore import calculus
from jetforms.jetcore.chart import BaseCoordinate, FiberCoordinate
from jetforms.jetcore.exceptions import ChartError

class ScalarExpr(object):
    '''Exact scalar expression over a chart

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg expr: anything :func:`sympy.sympify` accepts
    :kwarg canonicalize: set to :data:`False` only when `expr` is known to be
        canonical already
    '''
    __slots__ = ('chart', 'expr')

    def __init__(self, chart, expr, canonicalize=True):
        self.chart = chart
        if isinstance(expr, ScalarExpr):
            expr = expr.expr
        if canonicalize:
            expr = calculus.canonical(chart, expr)
        self.expr = expr

    @classmethod
    def from_string(cls, chart, text):
        '''Read an expression written with the chart's symbol names'''
        return cls(chart, chart.parse_expression(text))

    def _wrap(self, expr):
        return ScalarExpr(self.chart, expr)

    def _coerce(self, other):
        if isinstance(other, ScalarExpr):
            if other.chart != self.chart:
                raise ChartError(_('expressions live on different charts'))
            return other.expr
        if isinstance(other, (int, sp.Basic)):
            return sp.sympify(other)
        if isinstance(other, float):
            raise TypeError(_('floats are not allowed in exact expressions'))
        return NotImplemented

    #
    # Structure
    #

    @property
    def numerator(self):
        return sp.fraction(self.expr)[0]

    @property
    def denominator(self):
        return sp.fraction(self.expr)[1]

    @property
    def order(self):
        '''Highest jet order among the coordinates the expression uses'''
        return self.chart.jet_order(self.expr)

    def is_zero(self):
        return self.expr == 0

    @property
    def atoms(self):
        '''Opaque atoms occurring in the expression'''
        return frozenset(self.chart.atoms_in(self.expr))

    def fiber_symbols(self):
        return frozenset(self.chart.fiber_symbols_in(self.expr))

    def __eq__(self, other):
        if isinstance(other, ScalarExpr):
            return self.chart == other.chart and self.expr == other.expr
        if isinstance(other, (int, sp.Basic)):
            return self.expr == calculus.canonical(self.chart, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.expr)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return sp.sstr(self.expr)

    def __repr__(self):
        return 'ScalarExpr(%s)' % sp.sstr(self.expr)

    #
    # Arithmetic
    #

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.expr + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.expr - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(other - self.expr)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.expr * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other == 0:
            raise ZeroDivisionError(_('division by the zero expression'))
        return self._wrap(self.expr / other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            raise ZeroDivisionError(_('division by the zero expression'))
        return self._wrap(other / self.expr)

    def __neg__(self):
        return ScalarExpr(self.chart, -self.expr)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise TypeError(_('only integer exponents are supported'))
        if exponent < 0 and self.is_zero():
            raise ZeroDivisionError(_('division by the zero expression'))
        return self._wrap(self.expr ** exponent)

    #
    # Calculus
    #

    def partial(self, coordinate):
        '''Partial derivative with respect to a jet coordinate

        :arg coordinate: a :class:`~jetforms.jetcore.chart.BaseCoordinate`,
            a :class:`~jetforms.jetcore.chart.FiberCoordinate` or the
            coordinate's symbol
        :raises UnknownCoordinateError: if it is not a coordinate of the chart
        '''
        if isinstance(coordinate, (BaseCoordinate, FiberCoordinate)):
            symbol = self.chart.symbol_for(coordinate)
        else:
            symbol = coordinate
        return self._wrap(calculus.coordinate_partial(self.chart, self.expr,
            symbol))

    def total_derivative(self, index):
        return self._wrap(calculus.total_derivative(self.chart, self.expr,
            index))

    def fiber_scale(self):
        '''Apply ``y^sigma_J -> t y^sigma_J``'''
        return self._wrap(calculus.fiber_scale(self.chart, self.expr))

    def integrate_t01(self):
        '''Integrate over the homotopy parameter from 0 to 1'''
        return self._wrap(calculus.integrate_unit_interval(self.expr))

    def zero_section(self):
        return self._wrap(calculus.zero_section(self.chart, self.expr))

    def subs(self, mapping):
        '''Simultaneous substitution of symbols'''
        mapping = dict((key, self._coerce(value))
                for key, value in mapping.items())
        return self._wrap(self.expr.xreplace(mapping))

def partial_derivative(e, c):
    '''``de/dc`` for a jet coordinate ``c``; see :meth:`ScalarExpr.partial`'''
    return e.partial(c)

def total_derivative(e, i):
    '''Total derivative ``d_i e``

    :raises OrderOverflowError: naming the coordinate beyond the chart's
        maximum order
    '''
    return e.total_derivative(i)

def fiber_scale(e):
    return e.fiber_scale()

def integrate_t01(e):
    return e.integrate_t01()

__all__ = ('ScalarExpr', 'fiber_scale', 'integrate_t01', 'partial_derivative',
        'total_derivative')
