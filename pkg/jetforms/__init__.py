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
jetforms

Symbolic Euler-Lagrange forms and Lepage equivalents for Lagrangians on jet
prolongations of fibered manifolds.
'''

# Pylint disabled messages:
# :C0103: gettext aliases are conventionally named _ and N_
from jetforms import i18n
from jetforms import versioning

#pylint: disable-msg=C0103
(_, N_) = i18n.easy_gettext_setup('jetforms.core')
#pylint: enable-msg=C0103

__version_info__ = ((0, 3, 0),)
__version__ = versioning.version_tuple_to_string(__version_info__)

__all__ = ('exceptions', 'release', 'settings')
