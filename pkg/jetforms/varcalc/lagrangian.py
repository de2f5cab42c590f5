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
----------------------------
Lagrangians and source forms
----------------------------

A :class:`Lagrangian` is the horizontal n-form ``lambda = L w_0`` of some
declared order ``r``; a :class:`SourceForm` is a 1-contact ``(n+1)``-form
``eps_sigma w^sigma ^ w_0``.  Both carry their chart and keep their
components as canonical sympy expressions.
'''
import sympy as sp

from jetforms import _
from jetforms.forms.basis import CONTACT, DX, contact_basis, dx_basis
from jetforms.forms.exceptions import FormError
from jetforms.forms.form import DiffForm, omega0
from jetforms.jetcore import calculus
from jetforms.jetcore.expr import ScalarExpr

def _expr(chart, value):
    if isinstance(value, ScalarExpr):
        if value.chart != chart:
            raise FormError(_('expression lives on a different chart'))
        return value.expr
    if isinstance(value, float):
        raise TypeError(_('floats are not allowed in exact expressions'))
    return calculus.canonical(chart, sp.sympify(value))

class Lagrangian(object):
    '''The Lagrangian ``lambda = density w_0``

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg density: the Lagrange function, a :class:`ScalarExpr` or anything
        :func:`sympy.sympify` accepts
    :kwarg order: declared order ``r``.  Defaults to the jet order of the
        density; a declared order below it is an error.
    :raises ValueError: if `order` is negative or below the density's order
    '''
    __hash__ = None

    def __init__(self, chart, density, order=None):
        self.chart = chart
        self.density = _expr(chart, density)
        natural = chart.jet_order(self.density)
        if order is None:
            order = natural
        order = int(order)
        if order < 0:
            raise ValueError(_('a Lagrangian order must not be negative'))
        if order < natural:
            raise ValueError(_('density of order %(natural)s declared with'
                ' order %(order)s') % {'natural': natural, 'order': order})
        self.order = order

    @classmethod
    def from_form(cls, form, order=None):
        '''Read a Lagrangian back from a horizontal n-form

        :raises FormError: if `form` has the wrong degree or contact factors
        '''
        chart = form.chart
        if form.degree != chart.n:
            raise FormError(_('a Lagrangian is an n-form, got degree'
                ' %(degree)s') % {'degree': form.degree})
        lifted = form.lift(form.order + 1) if form.has_top_factors() else form
        volume = tuple(dx_basis(index) for index in range(chart.n))
        for monomial in lifted.terms:
            if monomial != volume:
                raise FormError(_('a Lagrangian has no contact factors'))
        density = lifted.terms.get(volume, 0)
        if order is None:
            order = max(form.order, chart.jet_order(sp.sympify(density)))
        return cls(chart, density, order=order)

    @property
    def expr(self):
        return ScalarExpr(self.chart, self.density, canonicalize=False)

    def form(self):
        '''``density w_0`` on ``J^order Y``'''
        return omega0(self.chart, self.order) * self.density

    def has_atoms(self):
        return self.chart.has_atoms(self.density)

    def is_polynomial(self):
        '''True when the density is a polynomial in the fiber coordinates'''
        if self.has_atoms():
            return False
        symbols = self.chart.fiber_symbols_in(self.density)
        if not symbols:
            return True
        return self.density.is_polynomial(*symbols)

    def __eq__(self, other):
        if not isinstance(other, Lagrangian):
            return NotImplemented
        return self.chart == other.chart and self.density == other.density

    def _combine(self, other, sign):
        if not isinstance(other, Lagrangian):
            return NotImplemented
        if other.chart != self.chart:
            raise FormError(_('Lagrangians live on different charts'))
        return Lagrangian(self.chart, self.density + sign * other.density,
                order=max(self.order, other.order))

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Lagrangian(self.chart, -self.density, order=self.order)

    def __mul__(self, scalar):
        if isinstance(scalar, Lagrangian):
            return NotImplemented
        value = _expr(self.chart, scalar)
        return Lagrangian(self.chart, self.density * value,
                order=max(self.order, self.chart.jet_order(value)))

    __rmul__ = __mul__

    def __repr__(self):
        return 'Lagrangian(%s, order=%s)' % (sp.sstr(self.density), self.order)

class SourceForm(object):
    '''A source form ``eps_sigma w^sigma ^ w_0``

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg components: mapping of field name to ``eps_sigma``; missing fields
        have a zero component
    :kwarg order: declared order, by default the highest jet order of the
        components
    :raises FormError: for an unknown field
    '''
    __hash__ = None

    def __init__(self, chart, components, order=None):
        self.chart = chart
        for field in components:
            if field not in chart.fields:
                raise FormError(_('unknown field %(field)r') % {'field': field})
        self.components = dict((field, _expr(chart, components.get(field, 0)))
                for field in chart.fields)
        natural = max([chart.jet_order(value)
            for value in self.components.values()] + [0])
        self.order = natural if order is None else max(int(order), natural)

    def __getitem__(self, field):
        return self.components[field]

    def items(self):
        return [(field, self.components[field]) for field in self.chart.fields]

    def is_zero(self):
        return all(value == 0 for value in self.components.values())

    def form(self):
        '''The source form as a :class:`DiffForm` of degree ``n + 1``

        The form lives on order ``max(order, 1)`` so that ``w^sigma`` is a
        basis element.
        '''
        chart = self.chart
        volume = tuple(dx_basis(index) for index in range(chart.n))
        sign = -1 if chart.n % 2 else 1
        terms = {}
        for field, value in self.components.items():
            if value != 0:
                terms[volume + (contact_basis(field),)] = sign * value
        return DiffForm(chart, max(self.order, 1), chart.n + 1, terms,
                canonicalize=False)

    @classmethod
    def from_form(cls, form):
        '''Read the components back from a form
        ``eps_sigma w^sigma ^ w_0``

        :raises FormError: if the form has any other kind of term
        '''
        chart = form.chart
        sign = -1 if chart.n % 2 else 1
        components = {}
        for monomial, coeff in form.terms.items():
            head, last = monomial[:-1], monomial[-1]
            if len(head) != chart.n or any(f.kind != DX for f in head) \
                    or last.kind != CONTACT or last.multi:
                raise FormError(_('%(form)s is not a source form') %
                        {'form': form})
            components[last.field] = sign * coeff
        return cls(chart, components)

    def __eq__(self, other):
        if not isinstance(other, SourceForm):
            return NotImplemented
        return self.chart == other.chart and \
                self.components == other.components

    def __sub__(self, other):
        if not isinstance(other, SourceForm):
            return NotImplemented
        return SourceForm(self.chart, dict((field,
            self.components[field] - other.components[field])
            for field in self.chart.fields),
            order=max(self.order, other.order))

    def __repr__(self):
        return 'SourceForm(%s)' % ', '.join('%s: %s' % (field, sp.sstr(value))
                for field, value in self.items())

def is_affine_in_top_order(lagrangian):
    '''True when the density is affine in the coordinates ``y^sigma_J`` with
    ``|J| = r``'''
    chart = lagrangian.chart
    top = [chart.fiber_symbol(field, multi) for field in chart.fields
            for multi in chart.multi_indices(lagrangian.order)]
    gradient = calculus.jet_gradient(chart, lagrangian.density)
    for first in top:
        partial = gradient.get(first)
        if partial is None:
            continue
        for second in top:
            value = calculus.coordinate_partial(chart, partial, second)
            if not calculus.is_zero(chart, value):
                return False
    return True

__all__ = ('Lagrangian', 'SourceForm', 'is_affine_in_top_order')
