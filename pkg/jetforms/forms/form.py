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
Differential forms
------------------

A :class:`DiffForm` is a form on ``J^s Y`` written in the contact basis of
that order: a mapping from sorted wedge monomials of
:class:`~jetforms.forms.basis.BasisOneForm` to canonical coefficients.
Every operation returns a new form; forms are never changed in place.

Forms of different orders are identified with their pullbacks, so sums,
wedge products and comparisons first lift the lower order operand.  Lifting
rewrites each top order differential as::

    dy^sigma_J = w^sigma_J + y^sigma_{J+j} dx^j

which makes the contact degree of a term a count of its factors and turns
horizontalization into picking out the terms without contact factors.
'''
import itertools

import sympy as sp

from jetforms import _
from jetforms.forms.basis import (CONTACT, DX, DY, DYTOP, contact_basis,
        dx_basis, natural_basis, sort_monomial, top_basis)
from jetforms.forms.exceptions import FormError
from jetforms.jetcore import calculus
from jetforms.jetcore.expr import ScalarExpr

class _Accumulator(object):
    '''Collects coefficient pieces per sorted monomial'''
    def __init__(self):
        self.pieces = {}

    def add(self, coeff, factors):
        if coeff == 0:
            return
        sign, monomial = sort_monomial(factors)
        if not sign:
            return
        self.pieces.setdefault(monomial, []).append(
                coeff if sign > 0 else -coeff)

    def build(self, chart, order, degree):
        terms = dict((monomial, sp.Add(*parts))
                for monomial, parts in self.pieces.items())
        return DiffForm(chart, order, degree, terms)

def _expand_product(accumulator, coeff, monomial, replace):
    '''Multiply out a monomial whose factors are each replaced by a sum

    :arg replace: function mapping a factor to a list of
        ``(coefficient, factor)`` pairs
    '''
    options = [replace(factor) for factor in monomial]
    for choice in itertools.product(*options):
        value = coeff
        factors = []
        for factor_coeff, factor in choice:
            if factor_coeff != 1:
                value = value * factor_coeff
            factors.append(factor)
        accumulator.add(value, factors)

def _top_expansion(chart):
    '''Factor replacement ``dy^sigma_J -> w^sigma_J + y^sigma_{J+j} dx^j``
    for the top order differentials of a form lifted by one order'''
    def replace(factor):
        if factor.kind != DYTOP:
            return [(1, factor)]
        options = [(1, contact_basis(factor.field, factor.multi))]
        for j in range(chart.n):
            options.append((chart.fiber_symbol(factor.field,
                factor.multi.add(j)), dx_basis(j)))
        return options
    return replace

def _coefficient_expr(chart, value):
    if isinstance(value, ScalarExpr):
        if value.chart != chart:
            raise FormError(_('coefficient lives on a different chart'))
        return value.expr
    if isinstance(value, (int, sp.Basic)):
        return sp.sympify(value)
    raise TypeError(_('cannot use %(type)s as a form coefficient') %
            {'type': type(value).__name__})

class DiffForm(object):
    '''A differential form on ``J^order Y``

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg order: jet order ``s`` of the ambient space
    :arg degree: form degree
    :kwarg terms: mapping of sorted monomials (tuples of
        :class:`~jetforms.forms.basis.BasisOneForm`) to coefficients.  Zero
        coefficients are dropped.
    :kwarg canonicalize: set to :data:`False` only when the coefficients are
        canonical already
    :raises FormError: if a monomial is unsorted, has the wrong length or
        uses a basis element that does not exist at `order`
    '''
    __hash__ = None

    def __init__(self, chart, order, degree, terms=None, canonicalize=True):
        order = int(order)
        degree = int(degree)
        if order < 0 or degree < 0:
            raise ValueError(_('order and degree must not be negative'))
        self.chart = chart
        self.order = order
        self.degree = degree
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(monomial)
            self._check_monomial(monomial)
            coeff = _coefficient_expr(chart, coeff)
            if canonicalize:
                coeff = calculus.canonical(chart, coeff)
            if coeff != 0:
                cleaned[monomial] = coeff
        self.terms = cleaned

    def _check_monomial(self, monomial):
        if len(monomial) != self.degree:
            raise FormError(_('monomial %(monomial)s does not have degree'
                ' %(degree)s') % {'monomial': monomial, 'degree': self.degree})
        sign, ordered = sort_monomial(monomial)
        if sign != 1 or ordered != monomial:
            raise FormError(_('monomial %(monomial)s is not strictly sorted') %
                    {'monomial': monomial})
        for factor in monomial:
            if factor.kind == DX:
                if not 0 <= factor.index < self.chart.n:
                    raise FormError(_('dx[%(index)s] is not a base direction')
                            % {'index': factor.index})
                continue
            if factor.field not in self.chart.fields:
                raise FormError(_('unknown field %(field)r in %(factor)s') %
                        {'field': factor.field, 'factor': factor.label()})
            if factor.kind == CONTACT and len(factor.multi) < self.order:
                continue
            if factor.kind == DYTOP and len(factor.multi) == self.order:
                continue
            raise FormError(_('%(factor)s is not a basis one-form at order'
                ' %(order)s') % {'factor': factor.label(), 'order': self.order})

    @classmethod
    def zero(cls, chart, order, degree):
        return cls(chart, order, degree)

    @classmethod
    def from_terms(cls, chart, order, degree, pieces):
        '''Build a form from ``(coefficient, factors)`` pairs

        Factors may come in any order and monomials may repeat; signs and
        sums are sorted out here.
        '''
        accumulator = _Accumulator()
        for coeff, factors in pieces:
            accumulator.add(_coefficient_expr(chart, coeff), factors)
        return accumulator.build(chart, order, degree)

    #
    # Inspection
    #

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        '''``(monomial, coefficient)`` pairs in monomial order'''
        return sorted(self.terms.items(),
                key=lambda item: tuple(f.sort_key() for f in item[0]))

    def coefficient(self, factors):
        '''Coefficient of a wedge monomial given in any factor order'''
        sign, monomial = sort_monomial(factors)
        if not sign:
            return sp.S.Zero
        return sign * self.terms.get(monomial, sp.S.Zero)

    def has_top_factors(self):
        return any(factor.kind == DYTOP for monomial in self.terms
                for factor in monomial)

    def contact_degrees(self):
        '''Sorted list of the contact degrees occurring in the form'''
        form = self.lift(self.order + 1) if self.has_top_factors() else self
        return sorted(set(sum(1 for factor in monomial if factor.is_fiber)
            for monomial in form.terms))

    def max_coefficient_order(self):
        return max([self.chart.jet_order(coeff)
            for coeff in self.terms.values()] + [0])

    def has_atoms(self):
        return any(self.chart.has_atoms(coeff) for coeff in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.chart != other.chart or self.degree != other.degree:
            return False
        order = max(self.order, other.order)
        return self.lift(order).terms == other.lift(order).terms

    def __repr__(self):
        return 'DiffForm(order=%s, degree=%s, %s)' % (self.order, self.degree,
                str(self))

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for monomial, coeff in self.sorted_terms():
            factors = ' ^ '.join(factor.label() for factor in monomial)
            parts.append('(%s)%s' % (sp.sstr(coeff),
                ' ' + factors if factors else ''))
        return ' + '.join(parts)

    #
    # Order changes
    #

    def _lift_once(self):
        chart = self.chart
        order = self.order + 1
        if not self.has_top_factors():
            return DiffForm(chart, order, self.degree, self.terms,
                    canonicalize=False)
        replace = _top_expansion(chart)
        accumulator = _Accumulator()
        for monomial, coeff in self.terms.items():
            _expand_product(accumulator, coeff, monomial, replace)
        return accumulator.build(chart, order, self.degree)

    def lift(self, order):
        '''Pull the form back to ``J^order Y``

        :raises FormError: if `order` is below the form's order
        '''
        if order < self.order:
            raise FormError(_('cannot lift a form of order %(have)s to order'
                ' %(want)s') % {'have': self.order, 'want': order})
        form = self
        while form.order < order:
            form = form._lift_once()
        return form

    def _natural_terms(self):
        chart = self.chart

        def replace(factor):
            if factor.kind == DX:
                return [(1, factor)]
            options = [(1, natural_basis(factor.field, factor.multi))]
            if factor.kind == CONTACT:
                for j in range(chart.n):
                    options.append((-chart.fiber_symbol(factor.field,
                        factor.multi.add(j)), dx_basis(j)))
            return options

        accumulator = _Accumulator()
        for monomial, coeff in self.terms.items():
            _expand_product(accumulator, coeff, monomial, replace)
        terms = {}
        for monomial, parts in accumulator.pieces.items():
            coeff = calculus.canonical(chart, sp.Add(*parts))
            if coeff != 0:
                terms[monomial] = coeff
        return terms

    def natural_order(self):
        '''Smallest ``q`` such that the form is the pullback of a form on
        ``J^q Y``

        Computed in the natural basis ``(dx^i, dy^sigma_J)`` after
        cancellation.  Coefficients holding opaque atoms are compared
        syntactically, so the result is an upper bound for them.
        '''
        order = 0
        for monomial, coeff in self._natural_terms().items():
            order = max(order, self.chart.jet_order(coeff))
            for factor in monomial:
                if factor.kind == DY:
                    order = max(order, len(factor.multi))
        return order

    def reduce_order(self, order):
        '''Re-express the form on ``J^order Y``

        :raises FormError: if the form's natural order exceeds `order`
        '''
        if order >= self.order:
            return self.lift(order)
        chart = self.chart
        natural = self._natural_terms()

        def replace(factor):
            if factor.kind == DX:
                return [(1, factor)]
            if len(factor.multi) > order:
                raise FormError(_('form has natural order above %(order)s') %
                        {'order': order})
            if len(factor.multi) == order:
                return [(1, top_basis(factor.field, factor.multi))]
            options = [(1, contact_basis(factor.field, factor.multi))]
            for j in range(chart.n):
                options.append((chart.fiber_symbol(factor.field,
                    factor.multi.add(j)), dx_basis(j)))
            return options

        accumulator = _Accumulator()
        for monomial, coeff in natural.items():
            if chart.jet_order(coeff) > order:
                raise FormError(_('form has natural order above %(order)s') %
                        {'order': order})
            _expand_product(accumulator, coeff, monomial, replace)
        return accumulator.build(chart, order, self.degree)

    #
    # Algebra
    #

    def _check_compatible(self, other):
        if not isinstance(other, DiffForm):
            raise TypeError(_('expected a DiffForm, got %(type)s') %
                    {'type': type(other).__name__})
        if self.chart != other.chart:
            raise FormError(_('forms live on different charts'))

    def __add__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        self._check_compatible(other)
        if self.degree != other.degree:
            raise FormError(_('cannot add forms of degrees %(a)s and %(b)s') %
                    {'a': self.degree, 'b': other.degree})
        order = max(self.order, other.order)
        left = self.lift(order)
        right = other.lift(order)
        terms = dict(left.terms)
        for monomial, coeff in right.terms.items():
            if monomial in terms:
                terms[monomial] = terms[monomial] + coeff
            else:
                terms[monomial] = coeff
        return DiffForm(self.chart, order, self.degree, terms)

    def __neg__(self):
        return DiffForm(self.chart, self.order, self.degree,
                dict((monomial, -coeff)
                    for monomial, coeff in self.terms.items()),
                canonicalize=False)

    def __sub__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, DiffForm):
            return NotImplemented
        value = _coefficient_expr(self.chart, scalar)
        order = max(self.order, self.chart.jet_order(value))
        form = self.lift(order)
        return DiffForm(self.chart, order, self.degree,
                dict((monomial, coeff * value)
                    for monomial, coeff in form.terms.items()))

    __rmul__ = __mul__

    def wedge(self, other):
        '''Exterior product ``self ^ other``; terms of too high degree
        simply vanish'''
        self._check_compatible(other)
        order = max(self.order, other.order)
        left = self.lift(order)
        right = other.lift(order)
        accumulator = _Accumulator()
        for (m1, c1), (m2, c2) in itertools.product(left.terms.items(),
                right.terms.items()):
            accumulator.add(c1 * c2, m1 + m2)
        return accumulator.build(self.chart, order, self.degree + other.degree)

    #
    # Calculus
    #

    def exterior_derivative(self):
        '''Exterior derivative, a form on ``J^{order+1} Y``

        ``df = d_i f dx^i + df/dy^sigma_J w^sigma_J`` and
        ``d w^sigma_J = dx^j ^ w^sigma_{J+j}``; ``dx^i`` and the top order
        differentials are closed.  Top order differentials of `self` are
        rewritten in the basis of ``J^{order+1} Y`` afterwards.
        '''
        chart = self.chart
        order = self.order + 1
        accumulator = _Accumulator()
        for monomial, coeff in self.terms.items():
            gradient = calculus.jet_gradient(chart, coeff)
            totals = calculus.total_derivatives(chart, coeff,
                    gradient=gradient)
            for index, value in enumerate(totals):
                accumulator.add(value, (dx_basis(index),) + monomial)
            for symbol, partial in gradient.items():
                coordinate = chart.coordinate(symbol)
                accumulator.add(partial, (contact_basis(coordinate.field,
                    coordinate.multi),) + monomial)
            for position, factor in enumerate(monomial):
                if factor.kind != CONTACT:
                    continue
                value = coeff if position % 2 == 0 else -coeff
                before = monomial[:position]
                after = monomial[position + 1:]
                for j in range(chart.n):
                    raised = contact_basis(factor.field, factor.multi.add(j))
                    accumulator.add(value, before + (dx_basis(j), raised)
                            + after)
        if not self.has_top_factors():
            return accumulator.build(chart, order, self.degree + 1)
        replace = _top_expansion(chart)
        expanded = _Accumulator()
        for monomial, parts in accumulator.pieces.items():
            _expand_product(expanded, sp.Add(*parts), monomial, replace)
        return expanded.build(chart, order, self.degree + 1)

    def split_contact(self):
        '''The decomposition ``[h rho, p_1 rho, ..., p_k rho]``

        All components live on ``J^{order+1} Y`` and sum to the lifted form.
        '''
        order = self.order + 1
        lifted = self.lift(order)
        buckets = [dict() for _count in range(self.degree + 1)]
        for monomial, coeff in lifted.terms.items():
            count = sum(1 for factor in monomial if factor.is_fiber)
            buckets[count][monomial] = coeff
        return [DiffForm(self.chart, order, self.degree, terms,
            canonicalize=False) for terms in buckets]

    def horizontal(self):
        '''Horizontalization ``h rho``'''
        return self.split_contact()[0]

    def contact_component(self, count):
        '''The ``count``-contact component ``p_count rho``'''
        if not 0 <= count <= self.degree:
            return DiffForm.zero(self.chart, self.order + 1, self.degree)
        return self.split_contact()[count]

    def interior(self, vector):
        '''Interior product with a vector field

        `vector` is anything with a ``contract(chart, factor)`` method
        returning the value of a basis one-form on it, such as a
        :class:`~jetforms.forms.vector.ProlongedField` or a
        :class:`~jetforms.forms.vector.CoordinateVector`.

        :raises FormError: for a 0-form
        '''
        if self.degree == 0:
            raise FormError(_('interior product of a 0-form'))
        chart = self.chart
        values = {}
        accumulator = _Accumulator()
        for monomial, coeff in self.terms.items():
            for position, factor in enumerate(monomial):
                if factor not in values:
                    values[factor] = sp.sympify(vector.contract(chart, factor))
                value = values[factor]
                if value == 0:
                    continue
                if position % 2:
                    value = -value
                accumulator.add(coeff * value,
                        monomial[:position] + monomial[position + 1:])
        form = accumulator.build(chart, self.order, self.degree - 1)
        return form

    def pullback_zero_section(self):
        '''Pullback by the zero section, a form on the base (order 0)

        :raises ZeroSectionDomainError: if an opaque atom is undefined on
            the zero section
        '''
        terms = {}
        for monomial, coeff in self.terms.items():
            if any(factor.is_fiber for factor in monomial):
                continue
            terms[monomial] = calculus.zero_section(self.chart, coeff)
        return DiffForm(self.chart, 0, self.degree, terms)

    def translate_fibers(self, shifts):
        '''Pullback by the fibered map ``y^sigma -> y^sigma + s^sigma(x)``

        :arg shifts: mapping of field names to sympy expressions in the base
            coordinates (undefined functions of them are allowed)
        :raises FormError: if a shift depends on anything but the base
            coordinates and parameters
        '''
        chart = self.chart
        allowed = set(chart.base_symbols) | set(chart.param_symbols)
        shifts = dict((field, sp.sympify(shift))
                for field, shift in shifts.items())
        for field, shift in shifts.items():
            if field not in chart.fields:
                raise FormError(_('unknown field %(field)r') % {'field': field})
            if not shift.free_symbols <= allowed:
                raise FormError(_('shift of %(field)s depends on more than'
                    ' the base coordinates') % {'field': field})

        def derivative(field, multi):
            return sp.diff(shifts[field],
                    *[chart.base_symbol(index) for index in multi])

        def move(coeff):
            mapping = {}
            for symbol in chart.fiber_symbols_in(coeff):
                coordinate = chart.coordinate(symbol)
                if coordinate.field in shifts:
                    mapping[symbol] = symbol + derivative(coordinate.field,
                            coordinate.multi)
            return coeff.xreplace(mapping) if mapping else coeff

        def replace(factor):
            if factor.kind != DYTOP or factor.field not in shifts:
                return [(1, factor)]
            options = [(1, factor)]
            for j in range(chart.n):
                options.append((derivative(factor.field, factor.multi.add(j)),
                    dx_basis(j)))
            return options

        accumulator = _Accumulator()
        for monomial, coeff in self.terms.items():
            _expand_product(accumulator, move(coeff), monomial, replace)
        return accumulator.build(chart, self.order, self.degree)

#
# Constructors
#

def scalar_form(chart, expr, order=None):
    '''The 0-form given by a function on a jet space'''
    expr = _coefficient_expr(chart, expr)
    if order is None:
        order = chart.jet_order(expr)
    return DiffForm(chart, order, 0, {(): expr})

def dx(chart, index, order=0):
    return DiffForm(chart, order, 1, {(dx_basis(index),): 1})

def contact(chart, field, multi=(), order=None):
    '''The contact form ``w^field_multi``, by default on the lowest jet
    space that has it'''
    if order is None:
        order = len(multi) + 1
    return DiffForm(chart, order, 1, {(contact_basis(field, multi),): 1})

def dy(chart, field, multi=(), order=None):
    '''The differential ``dy^field_multi`` expressed in the contact basis'''
    if order is None:
        order = len(multi)
    form = DiffForm(chart, len(multi), 1, {(top_basis(field, multi),): 1})
    return form.lift(order)

def omega0(chart, order=0):
    '''The volume form ``w_0 = dx^0 ^ ... ^ dx^{n-1}``'''
    monomial = tuple(dx_basis(index) for index in range(chart.n))
    return DiffForm(chart, order, chart.n, {monomial: 1})

def omega(chart, indices, order=0):
    '''``w_{i_1 ... i_k} = i_{d/dx^i_k} ... i_{d/dx^i_1} w_0``'''
    remaining = list(range(chart.n))
    sign = 1
    for index in indices:
        if index not in remaining:
            return DiffForm.zero(chart, order, chart.n - len(indices))
        position = remaining.index(index)
        if position % 2:
            sign = -sign
        remaining.remove(index)
    monomial = tuple(dx_basis(index) for index in remaining)
    return DiffForm(chart, order, len(monomial), {monomial: sign})

def wedge(a, b):
    return a.wedge(b)

def exterior_derivative(rho):
    return rho.exterior_derivative()

def split_contact(rho):
    return rho.split_contact()

def pullback_zero_section(rho):
    return rho.pullback_zero_section()

def translate_fibers(rho, shifts):
    return rho.translate_fibers(shifts)

__all__ = ('DiffForm', 'contact', 'dx', 'dy', 'exterior_derivative', 'omega',
        'omega0', 'pullback_zero_section', 'scalar_form', 'split_contact',
        'translate_fibers', 'wedge')
