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
--------------------
Euler-Lagrange forms
--------------------

The Euler-Lagrange form of ``lambda = L w_0`` of order ``r`` is the source
form with components

    ``E_sigma = sum over sorted J, |J| <= r, of (-1)^|J| d_J dL/dy^sigma_J``

Each sorted multi-index is one independent coordinate, so there are no
multiplicity weights.
'''
import logging

import sympy as sp

from jetforms.jetcore import calculus
from jetforms.varcalc.lagrangian import SourceForm

log = logging.getLogger(__name__)

def euler_lagrange(lagrangian):
    '''Euler-Lagrange form of a Lagrangian

    :arg lagrangian: a :class:`~jetforms.varcalc.lagrangian.Lagrangian`
    :returns: a :class:`~jetforms.varcalc.lagrangian.SourceForm` of declared
        order ``2r``
    :raises OrderOverflowError: if ``d_J`` needs coordinates beyond the
        chart's maximum order
    '''
    chart = lagrangian.chart
    gradient = calculus.jet_gradient(chart, lagrangian.density)
    components = {}
    for field in chart.fields:
        parts = []
        for multi in chart.multi_indices_upto(lagrangian.order):
            partial = gradient.get(chart.fiber_symbol(field, multi))
            if partial is None:
                continue
            value = calculus.iterated_total_derivative(chart, partial, multi)
            parts.append(-value if len(multi) % 2 else value)
        components[field] = calculus.canonical(chart, sp.Add(*parts))
    log.debug('Euler-Lagrange form of an order %s Lagrangian computed',
            lagrangian.order)
    return SourceForm(chart, components, order=2 * lagrangian.order)

def is_trivial(lagrangian):
    '''True when the Euler-Lagrange form vanishes identically

    With opaque atoms the answer is syntactic and may miss a cancellation.
    '''
    return euler_lagrange(lagrangian).is_zero()

__all__ = ('euler_lagrange', 'is_trivial')
