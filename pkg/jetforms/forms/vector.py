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
-------------
Vector fields
-------------

Projectable vector fields ``Xi = xi^i d/dx^i + Xi^sigma d/dy^sigma`` on
``Y``, their jet prolongations

    ``Xi^sigma_J = d_J(Xi^sigma - xi^i y^sigma_i) + xi^i y^sigma_{J+i}``

and the coordinate vectors ``d/dx^i`` of a jet space.  Both kinds of vector
know how to evaluate a basis one-form on themselves, which is all
:meth:`~jetforms.forms.form.DiffForm.interior` needs.
'''
import sympy as sp

from jetforms import _
from jetforms.forms.basis import CONTACT, DX
from jetforms.forms.exceptions import FormError, ProjectabilityError
from jetforms.jetcore import calculus
from jetforms.jetcore.chart import FiberCoordinate, MultiIndex
from jetforms.jetcore.expr import ScalarExpr

def _as_expr(chart, value):
    if isinstance(value, ScalarExpr):
        return value.expr
    return calculus.canonical(chart, sp.sympify(value))

class VectorFieldSpec(object):
    '''A projectable vector field on the fibered manifold

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :kwarg xi: base components, a sequence of ``n`` expressions in the base
        coordinates (and parameters) or a mapping of base index to
        expression.  Missing components are zero.
    :kwarg Xi: mapping of field name to fiber component, an expression of
        jet order zero
    :raises ProjectabilityError: if a base component depends on the fibers
    :raises FormError: if a fiber component involves derivatives
    '''
    def __init__(self, chart, xi=None, Xi=None):
        self.chart = chart
        if xi is None:
            xi = {}
        if not isinstance(xi, dict):
            xi = dict(enumerate(xi))
        self.xi = tuple(_as_expr(chart, xi.get(index, 0))
                for index in range(chart.n))
        for index, component in enumerate(self.xi):
            if chart.fiber_symbols_in(component) or chart.has_atoms(component):
                raise ProjectabilityError(_('xi^%(index)s = %(expr)s depends on'
                    ' fiber coordinates') % {'index': index, 'expr': component})
        Xi = Xi or {}
        for field in Xi:
            if field not in chart.fields:
                raise FormError(_('unknown field %(field)r') % {'field': field})
        self.Xi = dict((field, _as_expr(chart, Xi.get(field, 0)))
                for field in chart.fields)
        for field, component in self.Xi.items():
            if chart.jet_order(component) > 0:
                raise FormError(_('Xi^%(field)s must not involve derivatives')
                        % {'field': field})

    def is_vertical(self):
        return all(component == 0 for component in self.xi)

    def __repr__(self):
        return 'VectorFieldSpec(xi=%r, Xi=%r)' % (self.xi, self.Xi)

class ProlongedField(object):
    '''The jet prolongation of a :class:`VectorFieldSpec`

    Components are computed on demand and cached; :attr:`order` only bounds
    :attr:`components`.
    '''
    def __init__(self, spec, order):
        self.spec = spec
        self.chart = spec.chart
        self.order = int(order)
        self._cache = {}

    def component(self, field, multi=()):
        '''``Xi^field_multi``'''
        key = FiberCoordinate(field, MultiIndex(multi))
        value = self._cache.get(key)
        if value is not None:
            return value
        chart = self.chart
        xi = self.spec.xi
        characteristic = self.spec.Xi[field] - sp.Add(*[
            xi[index] * chart.fiber_symbol(field, (index,))
            for index in range(chart.n) if xi[index] != 0])
        value = calculus.iterated_total_derivative(chart, characteristic,
                key.multi)
        value = value + sp.Add(*[xi[index] * chart.fiber_symbol(field,
            key.multi.add(index)) for index in range(chart.n)
            if xi[index] != 0])
        value = calculus.canonical(chart, value)
        self._cache[key] = value
        return value

    @property
    def components(self):
        '''Table ``{(field, J): Xi^field_J}`` for ``|J| <= order``'''
        return dict(((field, multi), self.component(field, multi))
                for field, multi in self.chart.fiber_coordinates(self.order))

    def contract(self, chart, factor):
        xi = self.spec.xi
        if factor.kind == DX:
            return xi[factor.index]
        value = self.component(factor.field, factor.multi)
        if factor.kind == CONTACT:
            value = value - sp.Add(*[xi[j] * chart.fiber_symbol(factor.field,
                factor.multi.add(j)) for j in range(chart.n) if xi[j] != 0])
        return value

class CoordinateVector(object):
    '''The coordinate vector ``d/dx^index`` of a jet space'''
    def __init__(self, index):
        self.index = int(index)

    def contract(self, chart, factor):
        if factor.kind == DX:
            return 1 if factor.index == self.index else 0
        if factor.kind == CONTACT:
            return -chart.fiber_symbol(factor.field,
                    factor.multi.add(self.index))
        return 0

    def __repr__(self):
        return 'CoordinateVector(%s)' % self.index

def prolong_vector_field(spec, order):
    '''Prolongation of `spec` to ``J^order Y``

    :raises OrderOverflowError: if the chart's maximum order is too small
    '''
    prolonged = ProlongedField(spec, order)
    for field, multi in spec.chart.fiber_coordinates(order):
        prolonged.component(field, multi)
    return prolonged

def _as_vector(vector, order):
    if isinstance(vector, VectorFieldSpec):
        return ProlongedField(vector, order)
    return vector

def interior_product(vector, rho):
    '''``i_vector rho``; a :class:`VectorFieldSpec` is prolonged first'''
    return rho.interior(_as_vector(vector, rho.order))

def lie_derivative(vector, rho):
    '''Lie derivative by Cartan's formula ``d i rho + i d rho``'''
    vector = _as_vector(vector, rho.order + 1)
    derived = rho.exterior_derivative().interior(vector)
    if rho.degree == 0:
        return derived
    return rho.interior(vector).exterior_derivative() + derived

__all__ = ('CoordinateVector', 'ProlongedField', 'VectorFieldSpec',
        'interior_product', 'lie_derivative', 'prolong_vector_field')
