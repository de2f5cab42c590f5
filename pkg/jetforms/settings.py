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
---------------------
Project-wide defaults
---------------------

Constants shared by the symbolic and numeric halves of jetforms.  The only
value that can be changed from the environment is the maximum jet order,
through :envvar:`JETFORMS_MAX_ORDER`.
'''
import os

from jetforms import _

#: Highest jet order a chart will create coordinates for.  Eight is enough
#: for the canonical Lepage equivalent of a second order Lagrangian and its
#: exterior derivative.
DEFAULT_MAX_ORDER = 8

#: Environment variable consulted by :func:`max_order`
MAX_ORDER_ENV = 'JETFORMS_MAX_ORDER'

#: Relative tolerance for float checks of algebraic identities
ALGEBRAIC_TOLERANCE = 1e-9

#: Tolerance and step for central finite differences
FD_TOLERANCE = 1e-5
FD_STEP = 1e-3

#: Sampled metrics are rejected when ``|det g|`` falls below this value
METRIC_DET_THRESHOLD = 1e-3
#: Sampled metric entries lie in ``[-METRIC_ENTRY_BOUND, METRIC_ENTRY_BOUND]``
METRIC_ENTRY_BOUND = 2

DEFAULT_SEED = 0

def max_order(override=None):
    '''Resolve the maximum jet order

    :kwarg override: Value given explicitly (for instance on the command
        line).  Takes precedence over the environment.
    :returns: the maximum jet order as an :class:`int`
    :raises ValueError: if the resolved value is not a positive integer
    '''
    value = override
    if value is None:
        value = os.environ.get(MAX_ORDER_ENV)
    if value is None:
        return DEFAULT_MAX_ORDER
    try:
        order = int(value)
    except (TypeError, ValueError):
        raise ValueError(_('maximum jet order must be an integer, got %(value)r')
                % {'value': value})
    if order < 1:
        raise ValueError(_('maximum jet order must be at least 1, got %(value)s')
                % {'value': order})
    return order

__all__ = ('ALGEBRAIC_TOLERANCE', 'DEFAULT_MAX_ORDER', 'DEFAULT_SEED',
        'FD_STEP', 'FD_TOLERANCE', 'MAX_ORDER_ENV', 'METRIC_DET_THRESHOLD',
        'METRIC_ENTRY_BOUND', 'max_order')
