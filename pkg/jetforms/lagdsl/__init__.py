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
---------------
jetforms.lagdsl
---------------

The problem file language: a chart block, constant tensors, parameters,
opaque metric symbols, ``let`` bindings, the Lagrangian and an optional
reduced Lagrangian with its splitting form.  Summation is always explicit::

    chart { base t, x, y, z; fields phi; order 1; }
    constants { eta = diag(1, -1, -1, -1); }
    params { m2; }
    lagrangian {
        1/2*sum(i, j){ eta[i, j]*D(phi, i)*D(phi, j) } - 1/2*m2*phi^2
    }

:func:`~jetforms.lagdsl.elaborate.load_problem` reads such a file into a
chart and a :class:`~jetforms.varcalc.lagrangian.Lagrangian`.
'''

from jetforms.versioning import version_tuple_to_string

__version_info__ = ((0, 3, 0),)
__version__ = version_tuple_to_string(__version_info__)

__all__ = ('elaborate', 'exceptions', 'lexer', 'nodes', 'parser')
