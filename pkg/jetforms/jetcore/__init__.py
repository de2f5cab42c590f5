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
jetforms.jetcore
----------------

Fibered charts, symmetric multi-indices, opaque symbols and the exact scalar
expression engine (total derivatives, fiber scaling, integration over the
homotopy parameter).
'''

from jetforms.versioning import version_tuple_to_string

__version_info__ = ((0, 3, 0),)
__version__ = version_tuple_to_string(__version_info__)

__all__ = ('calculus', 'chart', 'exceptions', 'expr', 'opaque')
