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
--------------
Opaque symbols
--------------

Some Lagrangians (the Hilbert Lagrangian of general relativity above all)
are not polynomial in the fiber coordinates: they contain the inverse metric
``g^{ab}`` and the volume factor ``sqrt|det g|``.  Rather than rewriting
those as rational functions, they enter expressions as *atoms*: plain
symbols that carry

* a partial derivative rule with respect to the metric components,
* a degree under fiber scaling ``y -> t y`` (or none),
* a value on the zero section (or none),
* a numeric evaluation hook.

The metric is a symmetric rank-2 field family ``g`` whose components are
the fields ``g_p_q`` with ``p <= q``.  Each such field is one independent
coordinate, so derivative rules pick up the factor that comes with
``g_pq = g_qp``.
'''
import numpy as np
import sympy as sp

from jetforms import _
from jetforms.jetcore.exceptions import (ChartError, SingularMetricError,
        ZeroSectionDomainError)

def metric_field(family, p, q):
    '''Field name of the metric component ``g_pq`` of a symmetric family'''
    if p > q:
        p, q = q, p
    return '%s_%s_%s' % (family, p, q)

class OpaqueSymbol(object):
    '''Base class of the registered opaque symbols

    :arg name: identifier the atoms are named after
    :arg family: name of the symmetric rank-2 field family the symbol is
        built from
    :arg dim: size of the family
    '''
    def __init__(self, name, family, dim):
        self.name = name
        self.family = family
        self.dim = int(dim)
        self._components = {}
        for p in range(self.dim):
            for q in range(p, self.dim):
                self._components[metric_field(family, p, q)] = (p, q)

    def key(self):
        return (type(self).__name__, self.name, self.family, self.dim)

    def __eq__(self, other):
        if not isinstance(other, OpaqueSymbol):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return '%s(%r, %r, %r)' % (type(self).__name__, self.name, self.family,
                self.dim)

    def check_chart(self, chart):
        missing = [field for field in self._components
                if field not in chart.fields]
        if missing:
            raise ChartError(_('%(name)s needs the metric components'
                ' %(fields)s') % {'name': self.name,
                    'fields': ', '.join(sorted(missing))})

    def component_fields(self):
        return tuple(self._components)

    def dependencies(self, chart, indices):
        '''Symbols the atom depends on: every metric component'''
        return tuple(chart.fiber_symbol(field) for field in self._components)

    def component_of(self, chart, symbol):
        '''Return ``(p, q)`` if `symbol` is an undifferentiated metric
        component, else :data:`None`'''
        name = getattr(symbol, 'name', None)
        if name not in self._components:
            return None
        return self._components[name]

    def metric_matrix(self, chart, values):
        '''Numeric metric as a ``dim x dim`` :class:`numpy.ndarray`'''
        matrix = np.empty((self.dim, self.dim), dtype=float)
        for field, (p, q) in self._components.items():
            value = float(values[chart.fiber_symbol(field)])
            matrix[p, q] = matrix[q, p] = value
        return matrix

    def atom_table(self):
        raise NotImplementedError

    def derivative(self, chart, indices, symbol):
        raise NotImplementedError

    def scaling_degree(self):
        raise NotImplementedError

    def zero_value(self, chart, indices):
        raise NotImplementedError

    def evaluate(self, chart, values):
        raise NotImplementedError

class InverseMetric(OpaqueSymbol):
    '''The inverse metric ``g^{ab}``, atoms ``<name>_a_b`` with ``a <= b``

    * ``d g^{ab} / d g_pq = -(g^{ap} g^{qb} + g^{aq} g^{pb})`` for ``p != q``
      and ``-g^{ap} g^{pb}`` for ``p == q``
    * degree ``-1`` under fiber scaling
    * undefined on the zero section
    '''
    def __init__(self, name, family, dim):
        super().__init__(name, family, dim)
        self._atoms = {}
        for a in range(self.dim):
            for b in range(a, self.dim):
                self._atoms[(a, b)] = sp.Symbol('%s_%s_%s' % (name, a, b))

    def atom(self, a, b):
        if a > b:
            a, b = b, a
        return self._atoms[(a, b)]

    def atom_table(self):
        return dict((atom, indices) for indices, atom in self._atoms.items())

    def derivative(self, chart, indices, symbol):
        component = self.component_of(chart, symbol)
        if component is None:
            return sp.S.Zero
        a, b = indices
        p, q = component
        if p == q:
            return -self.atom(a, p) * self.atom(p, b)
        return -(self.atom(a, p) * self.atom(q, b) +
                self.atom(a, q) * self.atom(p, b))

    def scaling_degree(self):
        return sp.Integer(-1)

    def zero_value(self, chart, indices):
        raise ZeroSectionDomainError(_('zero section outside symbol domain:'
            ' %(name)s is undefined where the metric vanishes') %
            {'name': self.name})

    def evaluate(self, chart, values):
        matrix = self.metric_matrix(chart, values)
        try:
            inverse = np.linalg.inv(matrix)
        except np.linalg.LinAlgError:
            raise SingularMetricError(_('singular metric, %(name)s is'
                ' undefined') % {'name': self.name})
        if not np.all(np.isfinite(inverse)):
            raise SingularMetricError(_('singular metric, %(name)s is'
                ' undefined') % {'name': self.name})
        return dict((atom, float(inverse[a, b]))
                for (a, b), atom in self._atoms.items())

class VolumeFactor(OpaqueSymbol):
    '''The volume factor ``sqrt|det g|``, a single atom named ``<name>``

    :arg inverse: the :class:`InverseMetric` of the same family; the
        derivative rule is written with its atoms

    * ``d vol / d g_pq = vol g^{pq}`` for ``p != q`` and
      ``vol g^{pp} / 2`` for ``p == q``
    * degree ``dim/2`` under fiber scaling when ``dim`` is even; odd
      dimensions have no polynomial scaling and are rejected
    * zero on the zero section
    '''
    def __init__(self, name, family, dim, inverse):
        super().__init__(name, family, dim)
        if inverse.family != family or inverse.dim != self.dim:
            raise ChartError(_('%(name)s needs the inverse of the same metric'
                ' family') % {'name': name})
        self.inverse = inverse
        self.symbol = sp.Symbol(name)

    def key(self):
        return super().key() + (self.inverse.name,)

    def atom_table(self):
        return {self.symbol: ()}

    def check_chart(self, chart):
        super().check_chart(chart)
        if self.inverse not in chart.opaque_symbols:
            raise ChartError(_('%(name)s needs %(inverse)s to be declared on'
                ' the chart') % {'name': self.name,
                    'inverse': self.inverse.name})

    def derivative(self, chart, indices, symbol):
        component = self.component_of(chart, symbol)
        if component is None:
            return sp.S.Zero
        p, q = component
        if p == q:
            return sp.Rational(1, 2) * self.symbol * self.inverse.atom(p, p)
        return self.symbol * self.inverse.atom(p, q)

    def scaling_degree(self):
        if self.dim % 2:
            return None
        return sp.Integer(self.dim // 2)

    def zero_value(self, chart, indices):
        return sp.S.Zero

    def evaluate(self, chart, values):
        matrix = self.metric_matrix(chart, values)
        return {self.symbol: float(np.sqrt(abs(np.linalg.det(matrix))))}

__all__ = ('InverseMetric', 'OpaqueSymbol', 'VolumeFactor', 'metric_field')
