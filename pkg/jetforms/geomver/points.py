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
-----------------------
Jet points and sections
-----------------------

A :class:`JetPoint` assigns a number to every jet coordinate up to some
order and to every parameter.  Values are exact rationals unless the chart
has opaque symbols; their atoms are then evaluated through the numeric
hooks and the whole point works in floats.

A :class:`SectionSpec` is a polynomial section ``y^sigma = p^sigma(x)``
whose prolongation yields jet points and holonomic tangent vectors.
'''
import logging

import numpy as np
import sympy as sp

from jetforms import _, settings
from jetforms.geomver.exceptions import MissingAssignmentError
from jetforms.jetcore.chart import FiberCoordinate
from jetforms.jetcore.exceptions import SingularMetricError

log = logging.getLogger(__name__)

#: Sampled rationals are ``a / b`` with ``|a| <= RATIONAL_NUMERATOR`` and
#: ``1 <= b <= RATIONAL_DENOMINATOR``
RATIONAL_NUMERATOR = 9
RATIONAL_DENOMINATOR = 5

#: Resampling attempts before a metric sample is given up
METRIC_ATTEMPTS = 100

def random_rational(rng):
    '''A small random rational from a :class:`numpy.random.Generator`'''
    numerator = int(rng.integers(-RATIONAL_NUMERATOR, RATIONAL_NUMERATOR + 1))
    denominator = int(rng.integers(1, RATIONAL_DENOMINATOR + 1))
    return sp.Rational(numerator, denominator)

def _number(value):
    if isinstance(value, float):
        return sp.Float(value)
    return sp.sympify(value)

class JetPoint(object):
    '''Numeric values of the jet coordinates of order ``<= order``

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg values: mapping of coordinate or parameter symbols (or their names)
        to numbers.  Python floats make the point inexact.
    :kwarg order: highest jet order the point is meant to cover; only used
        for :meth:`coordinates`
    :raises SingularMetricError: if an opaque symbol's hook rejects the
        values
    '''
    def __init__(self, chart, values, order=0):
        self.chart = chart
        self.order = int(order)
        #: metric samples rejected while drawing a random point
        self.resampled = 0
        self.values = {}
        for key, value in values.items():
            if isinstance(key, str):
                symbol = chart.resolve_name(key)
                if symbol is None:
                    raise MissingAssignmentError(_('unknown coordinate'
                        ' %(name)s') % {'name': key}, coordinate=key)
                key = symbol
            self.values[key] = _number(value)
        self.exact = all(value.is_Rational for value in self.values.values())
        if chart.opaque_symbols:
            numeric = dict((symbol, float(value))
                    for symbol, value in self.values.items())
            for opaque in chart.opaque_symbols:
                for atom, value in opaque.evaluate(chart, numeric).items():
                    self.values[atom] = sp.Float(value)
            self.exact = False

    @classmethod
    def random(cls, chart, order, rng, exact=True):
        '''A random point on ``J^order Y``

        Charts with opaque symbols get their metric components from
        :func:`random_metric`; everything else is a small rational (or a
        float in ``[-2, 2]`` when `exact` is false).  The rejected metric
        samples are counted in :attr:`resampled`.

        :arg rng: a :class:`numpy.random.Generator`
        '''
        values = {}
        metric_fields = set()
        for opaque in chart.opaque_symbols:
            metric_fields.update(opaque.component_fields())
        for symbol in chart.coordinates(order):
            coordinate = chart.coordinate(symbol)
            if isinstance(coordinate, FiberCoordinate) and \
                    not coordinate.multi and coordinate.field in metric_fields:
                continue
            values[symbol] = _sample(rng, exact)
        for symbol in chart.param_symbols:
            values[symbol] = _sample(rng, exact)
        families = set()
        rejected = 0
        for opaque in chart.opaque_symbols:
            if opaque.family not in families:
                families.add(opaque.family)
                matrix, attempts = _metric_sample(opaque, rng)
                rejected += attempts
                values.update(_metric_values(chart, opaque, matrix))
        point = cls(chart, values, order)
        point.resampled = rejected
        return point

    def value(self, symbol):
        '''Value of one symbol

        :raises MissingAssignmentError: naming the symbol if it has none
        '''
        try:
            return self.values[symbol]
        except KeyError:
            raise MissingAssignmentError(_('no value for %(name)s at this jet'
                ' point') % {'name': symbol}, coordinate=str(symbol))

    def coordinates(self):
        return self.chart.coordinates(self.order)

    def evaluate(self, expr):
        '''Value of a sympy expression at the point

        :returns: a :class:`sympy.Rational` on an exact point, a
            :class:`float` otherwise
        :raises MissingAssignmentError: naming the first unassigned symbol
        '''
        expr = sp.sympify(expr)
        symbols = sorted(expr.free_symbols, key=sp.default_sort_key)
        mapping = dict((symbol, self.value(symbol)) for symbol in symbols)
        result = expr.xreplace(mapping)
        if self.exact:
            return result
        return float(result)

    def __repr__(self):
        return 'JetPoint(order=%s, %s values)' % (self.order, len(self.values))

def _sample(rng, exact):
    if exact:
        return random_rational(rng)
    return float(rng.uniform(-settings.METRIC_ENTRY_BOUND,
        settings.METRIC_ENTRY_BOUND))

def _metric_sample(opaque, rng):
    '''A symmetric matrix with ``|det| >= METRIC_DET_THRESHOLD`` and the
    number of samples rejected before it

    :raises SingularMetricError: after :data:`METRIC_ATTEMPTS` rejections
    '''
    bound = settings.METRIC_ENTRY_BOUND
    for attempt in range(METRIC_ATTEMPTS):
        matrix = rng.uniform(-bound, bound, size=(opaque.dim, opaque.dim))
        matrix = (matrix + matrix.T) / 2
        if abs(np.linalg.det(matrix)) >= settings.METRIC_DET_THRESHOLD:
            if attempt:
                log.debug('metric sample accepted after %s rejections',
                        attempt)
            return matrix, attempt
    raise SingularMetricError(_('could not sample a nondegenerate metric'))

def _metric_values(chart, opaque, matrix):
    values = {}
    for field in opaque.component_fields():
        p, q = opaque.component_of(chart, sp.Symbol(field))
        values[chart.fiber_symbol(field)] = float(matrix[p, q])
    return values

def random_metric(chart, opaque, rng):
    '''Sample the undifferentiated components of a symmetric field family

    Entries are uniform in ``[-METRIC_ENTRY_BOUND, METRIC_ENTRY_BOUND]`` and
    samples with ``|det g| < METRIC_DET_THRESHOLD`` are drawn again.

    :returns: mapping of the component symbols to floats
    :raises SingularMetricError: if no acceptable sample turns up
    '''
    return _metric_values(chart, opaque, _metric_sample(opaque, rng)[0])

class SectionSpec(object):
    '''A polynomial section ``y^sigma = p^sigma(x)``

    :arg chart: the :class:`~jetforms.jetcore.chart.ChartSpec`
    :arg components: mapping of field names to polynomials in the base
        symbols with rational coefficients; missing fields are zero
    :kwarg params: values of the chart parameters, one each by default
    '''
    def __init__(self, chart, components, params=None):
        self.chart = chart
        allowed = set(chart.base_symbols)
        self.components = {}
        for field in chart.fields:
            value = sp.sympify(components.get(field, 0), rational=True)
            if not value.free_symbols <= allowed:
                raise ValueError(_('section component %(field)s must depend'
                    ' on the base coordinates only') % {'field': field})
            self.components[field] = value
        params = params or {}
        self.params = dict((chart.param_symbol(name),
            sp.sympify(params.get(name, 1), rational=True))
            for name in chart.params)

    @classmethod
    def random(cls, chart, degree, rng):
        '''Random polynomials of total degree ``<= degree`` and random
        parameter values'''
        monomials = sorted(sp.itermonomials(chart.base_symbols, degree),
                key=sp.default_sort_key)
        components = {}
        for field in chart.fields:
            components[field] = sp.Add(*[random_rational(rng) * monomial
                for monomial in monomials])
        params = dict((name, random_rational(rng) or 1)
                for name in chart.params)
        return cls(chart, components, params)

    def derivative(self, field, multi):
        return sp.diff(self.components[field],
                *[self.chart.base_symbol(index) for index in multi])

    def jet_point(self, base_point, order):
        '''The prolongation ``J^order gamma(x)`` as a :class:`JetPoint`

        :arg base_point: sequence of ``n`` numbers
        '''
        chart = self.chart
        base = dict(zip(chart.base_symbols, (sp.sympify(value, rational=True)
            for value in base_point)))
        values = dict(base)
        for field, multi in chart.fiber_coordinates(order):
            values[chart.fiber_symbol(field, multi)] = \
                    self.derivative(field, multi).xreplace(base)
        values.update(self.params)
        return JetPoint(chart, values, order)

    def tangent_vectors(self, base_point, order):
        '''The holonomic vectors ``T_i = J^order gamma_* d/dx^i``

        Component arrays are aligned with ``chart.coordinates(order)``.
        '''
        chart = self.chart
        point = self.jet_point(base_point, order + 1)
        symbols = chart.coordinates(order)
        vectors = []
        for index in range(chart.n):
            vector = []
            for symbol in symbols:
                coordinate = chart.coordinate(symbol)
                if isinstance(coordinate, FiberCoordinate):
                    vector.append(point.value(chart.fiber_symbol(
                        coordinate.field, coordinate.multi.add(index))))
                else:
                    vector.append(sp.Integer(coordinate.index == index))
            vectors.append(vector)
        return vectors

__all__ = ('JetPoint', 'METRIC_ATTEMPTS', 'RATIONAL_DENOMINATOR',
        'RATIONAL_NUMERATOR', 'SectionSpec', 'random_metric',
        'random_rational')
