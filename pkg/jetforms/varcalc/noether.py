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
----------------
Noether currents
----------------

For a Lepage equivalent ``theta`` and a projectable vector field ``Xi`` the
first variation formula splits ``L_{J Xi} lambda`` into an Euler-Lagrange
term and the divergence of the Noether current ``h i_{J Xi} theta``.
'''
from jetforms import _
from jetforms.forms.exceptions import FormError
from jetforms.forms.vector import ProlongedField, VectorFieldSpec
from jetforms.varcalc.lepage import LepageResult, horizontal_components

def noether_current(theta, xi):
    '''The Noether current ``h i_{J Xi} theta``, a horizontal (n-1)-form

    :arg theta: a :class:`~jetforms.varcalc.lepage.LepageResult` or an
        n-form
    :arg xi: a :class:`~jetforms.forms.vector.VectorFieldSpec`, prolonged to
        the order of ``theta``
    '''
    if isinstance(theta, LepageResult):
        theta = theta.form
    if not isinstance(xi, VectorFieldSpec):
        raise TypeError(_('expected a VectorFieldSpec'))
    if xi.chart != theta.chart:
        raise FormError(_('vector field and form live on different charts'))
    return theta.interior(ProlongedField(xi, theta.order)).horizontal()

def current_components(current):
    '''Components ``J^i`` of a current ``J^i w_i``'''
    return horizontal_components(current)

__all__ = ('current_components', 'noether_current')
