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
-------------------------
Fibered homotopy operator
-------------------------

The fibered homotopy ``chi(t, y) = t y`` contracts every fiber to the zero
section.  Integrating it against the contraction by the vertical Euler
field ``y^sigma_J d/dy^sigma_J`` gives the operator :func:`homotopy_I` with

    ``rho = I d rho + d I rho + 0* rho``

where ``0* rho`` is the pullback of ``rho`` by the zero section.  The same
contraction applied to a source form is the Vainberg-Tonti Lagrangian.

All coefficients must be polynomial in the fiber coordinates (atoms with a
declared scaling degree count as polynomial).
'''
import logging

import sympy as sp

from jetforms.forms.form import DiffForm
from jetforms.jetcore import calculus
from jetforms.jetcore.calculus import HOMOTOPY_PARAMETER
from jetforms.varcalc.lagrangian import Lagrangian

log = logging.getLogger(__name__)

def homotopy_I(rho):
    '''The fibered homotopy operator

    For a monomial ``f dz^1 ^ ... ^ dz^k`` whose fiber factors sit at
    positions ``b_1 < ... < b_q``:

        ``I(f dz) = sum_a (-1)^(b_a) y_(b_a) int_0^1 t^(q-1) f(t y) dt
        (dz without dz^(b_a))``

    with positions counted from zero.  ``I`` of a 0-form is zero.

    :arg rho: a :class:`~jetforms.forms.form.DiffForm`
    :returns: a form of degree ``rho.degree - 1`` on the same order
    :raises NotFiberScalableError: if an opaque atom has no scaling degree
    :raises HomotopyError: if an integrand is not polynomial in ``t``
    '''
    chart = rho.chart
    if rho.degree == 0:
        return DiffForm.zero(chart, rho.order, 0)
    pieces = []
    integrals = 0
    for monomial, coeff in rho.terms.items():
        positions = [position for position, factor in enumerate(monomial)
                if factor.is_fiber]
        if not positions:
            continue
        scaled = calculus.fiber_scale(chart, coeff)
        integrand = scaled * HOMOTOPY_PARAMETER ** (len(positions) - 1)
        integral = calculus.integrate_unit_interval(sp.expand(integrand))
        integrals += 1
        if integral == 0:
            continue
        for position in positions:
            factor = monomial[position]
            value = chart.fiber_symbol(factor.field, factor.multi) * integral
            if position % 2:
                value = -value
            pieces.append((value,
                monomial[:position] + monomial[position + 1:]))
    log.debug('homotopy operator: %s integrals over t', integrals)
    return DiffForm.from_terms(chart, rho.order, rho.degree - 1, pieces)

def vainberg_tonti(source):
    '''The Vainberg-Tonti Lagrangian
    ``L_0 = y^sigma int_0^1 eps_sigma(x, t y) dt``

    :arg source: a :class:`~jetforms.varcalc.lagrangian.SourceForm`
    :returns: a :class:`~jetforms.varcalc.lagrangian.Lagrangian` of the same
        declared order
    :raises HomotopyError: if a component is not polynomial in the fibers
    '''
    chart = source.chart
    parts = []
    for field, value in source.items():
        if value == 0:
            continue
        scaled = sp.expand(calculus.fiber_scale(chart, value))
        parts.append(chart.fiber_symbol(field) *
                calculus.integrate_unit_interval(scaled))
    return Lagrangian(chart, sp.Add(*parts), order=source.order)

def homotopy_residual(rho):
    '''``rho - I d rho - d I rho - 0* rho``, zero whenever the homotopy
    identity holds

    For a 0-form the ``d I`` term is absent.
    '''
    residual = rho - homotopy_I(rho.exterior_derivative()) - \
            rho.pullback_zero_section()
    if rho.degree:
        residual = residual - homotopy_I(rho).exterior_derivative()
    return residual

__all__ = ('homotopy_I', 'homotopy_residual', 'vainberg_tonti')
